//! Torus localization on the Hilbert scheme of points of a toric surface.
//!
//! Fixed points of `S^[n]` are tuples of monomial ideals, one per chart,
//! encoded as Young diagrams. Row `r`, column `c` of the diagram at a chart
//! is the monomial `x^c y^r`, where `x` and `y` are the chart coordinates
//! whose tangent directions carry the characters `t1` and `t2`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{vars, AlgebraError, MultiPoly, Rat, Vars};
use crate::toric::{Character, EquivariantLineBundle, ToricSurfaceModel};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LocalizationError {
    #[error("bundle lives on `{bundle}` but the integral is over `{surface}`")]
    SurfaceMismatch { surface: String, bundle: String },
    #[error("no specialization avoiding zero tangent weights after {0} draws")]
    NoSpecialization(usize),
    #[error("fixed-point sum depends on the specialization ({first} vs {second}); the class is not a well-defined equivariant class")]
    Disagreement { first: String, second: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
                .collect(),
        }
    }

    /// Boxes as `(row, column)`, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r as u32, c)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// A torus-fixed point of `S^[n]`: one partition per chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HilbFixedPoint {
    assignment: Vec<Partition>,
}

impl HilbFixedPoint {
    pub fn new(assignment: Vec<Partition>) -> Self {
        HilbFixedPoint { assignment }
    }

    pub fn n(&self) -> u32 {
        self.assignment.iter().map(Partition::size).sum()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.assignment
    }
}

/// Integer linear forms in `(u, v)` with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightMultiset(pub Vec<Character>);

impl WeightMultiset {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted copy, for multiset comparison.
    pub fn sorted(&self) -> Vec<Character> {
        let mut v = self.0.clone();
        v.sort();
        v
    }

    pub fn eval(&self, point: &Specialization) -> Vec<Rat> {
        self.0.iter().map(|c| c.eval(&point.u, &point.v)).collect()
    }
}

/// Every assignment of partitions to charts with total size `n`, each
/// exactly once, in a canonical order.
pub fn hilb_fixed_points(surface: &ToricSurfaceModel, n: u32) -> Vec<HilbFixedPoint> {
    let charts = surface.charts().len();
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Partition> = Vec::with_capacity(charts);
    fn go(
        chart: usize,
        charts: usize,
        rem: u32,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<HilbFixedPoint>,
    ) {
        if chart == charts {
            if rem == 0 {
                out.push(HilbFixedPoint::new(cur.clone()));
            }
            return;
        }
        let sizes: Vec<u32> = if chart + 1 == charts { vec![rem] } else { (0..=rem).rev().collect() };
        for k in sizes {
            for p in &by_size[k as usize] {
                cur.push(p.clone());
                go(chart + 1, charts, rem - k, by_size, cur, out);
                cur.pop();
            }
        }
    }
    if charts > 0 || n == 0 {
        go(0, charts, n, &by_size, &mut cur, &mut out);
    }
    out
}

/// Arm-leg characters of the tangent space `T_p S^[n]`: for each box with
/// arm `a` and leg `l` at a chart with tangent characters `(t1, t2)`, the
/// pair `(a+1) t1 - l t2` and `-a t1 + (l+1) t2`.
pub fn tangent_weights(surface: &ToricSurfaceModel, point: &HilbFixedPoint) -> WeightMultiset {
    let mut out = Vec::with_capacity(2 * point.n() as usize);
    for (chart, lambda) in surface.charts().iter().zip(point.partitions()) {
        let [t1, t2] = chart.tangent_characters;
        let conj = lambda.conjugate();
        for (r, c) in lambda.boxes() {
            let arm = (lambda.parts()[r as usize] - c - 1) as i64;
            let leg = (conj.parts()[c as usize] - r - 1) as i64;
            out.push((arm + 1) * t1 - leg * t2);
            out.push(-arm * t1 + (leg + 1) * t2);
        }
    }
    WeightMultiset(out)
}

/// Characters of the fiber of `L^[n]` at `p`: the sections `x^c y^r s` of
/// `L` restricted to the subscheme, `w - c t1 - r t2` for the box in row
/// `r`, column `c`, where `w` is the fiber character of `L` at the chart.
pub fn taut_weights(point: &HilbFixedPoint, bundle: &EquivariantLineBundle) -> WeightMultiset {
    let surface = bundle.surface();
    let mut out = Vec::with_capacity(point.n() as usize);
    for (chart, lambda) in surface.charts().iter().zip(point.partitions()) {
        let [t1, t2] = chart.tangent_characters;
        let w = bundle.chart_weight(chart.id);
        for (r, c) in lambda.boxes() {
            out.push(w - c as i64 * t1 - r as i64 * t2);
        }
    }
    WeightMultiset(out)
}

/// A polynomial in the Chern classes `c_i(L^[n])` (`cL1..cLn`) and
/// `c_j(T S^[n])` (`cT1..cT2n`), graded by `deg cLi = i`, `deg cTj = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautologicalClass {
    n: u32,
    poly: MultiPoly,
}

impl TautologicalClass {
    pub fn ring(n: u32) -> Vars {
        let mut names: Vec<String> = (1..=n).map(|i| format!("cL{i}")).collect();
        names.extend((1..=2 * n).map(|j| format!("cT{j}")));
        vars(&names)
    }

    pub fn weights(n: u32) -> Vec<u32> {
        (1..=n).chain(1..=2 * n).collect()
    }

    /// Wraps a polynomial over [`TautologicalClass::ring`] (by name).
    pub fn from_poly(n: u32, poly: MultiPoly) -> Result<Self, AlgebraError> {
        let ring = Self::ring(n);
        if poly.vars()[..] != ring[..] {
            for v in poly.vars().iter() {
                if !ring.contains(v) {
                    return Err(AlgebraError::UnknownVariable(v.clone()));
                }
            }
            // Re-embed by name.
            let idx: Vec<usize> = poly
                .vars()
                .iter()
                .map(|v| ring.iter().position(|r| r == v).unwrap())
                .collect();
            let mut out = MultiPoly::zero(ring.clone());
            for (e, c) in poly.terms() {
                let mut full = vec![0; ring.len()];
                for (k, &i) in idx.iter().enumerate() {
                    full[i] = e[k];
                }
                out.add_term(full, c.clone());
            }
            return Ok(TautologicalClass { n, poly: out });
        }
        Ok(TautologicalClass { n, poly })
    }

    pub fn one(n: u32) -> Self {
        TautologicalClass { n, poly: MultiPoly::one(Self::ring(n)) }
    }

    /// `c_i(L^[n])`; `c_0 = 1` and `c_i = 0` for `i > n`.
    pub fn taut_chern(n: u32, i: u32) -> Self {
        Self::chern(n, i, n, 0)
    }

    /// `c_j(T S^[n])`; zero beyond `2n`.
    pub fn tangent_chern(n: u32, j: u32) -> Self {
        Self::chern(n, j, 2 * n, n as usize)
    }

    fn chern(n: u32, i: u32, rank: u32, offset: usize) -> Self {
        let ring = Self::ring(n);
        let poly = match i {
            0 => MultiPoly::one(ring),
            i if i > rank => MultiPoly::zero(ring),
            i => MultiPoly::var(ring.clone(), &ring[offset + i as usize - 1]).unwrap(),
        };
        TautologicalClass { n, poly }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        TautologicalClass { n: self.n, poly: &self.poly * &other.poly }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        TautologicalClass { n: self.n, poly: &self.poly + &other.poly }
    }

    pub fn pow(&self, e: u32) -> Self {
        TautologicalClass { n: self.n, poly: self.poly.pow(e) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TautologicalClass { n: self.n, poly: self.poly.scale(c) }
    }

    /// Component of cohomological degree `2d` (weighted degree `d`).
    pub fn degree_part(&self, d: u32) -> Self {
        TautologicalClass { n: self.n, poly: self.poly.homogeneous_part(&Self::weights(self.n), d) }
    }

    /// Value at a fixed point with the given numeric weights:
    /// `cLi -> e_i(taut)`, `cTj -> e_j(tangent)`.
    pub fn restrict(&self, taut: &[Rat], tangent: &[Rat]) -> Rat {
        let mut values = elementary_symmetric(taut, self.n as usize);
        values.extend(elementary_symmetric(tangent, 2 * self.n as usize));
        self.poly.evaluate_ordered(&values)
    }
}

/// `e_1, ..., e_k` of the given values.
pub fn elementary_symmetric(xs: &[Rat], k: usize) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); k + 1];
    e[0] = Rat::one();
    for x in xs {
        for i in (1..=k).rev() {
            let prev = &e[i - 1] * x;
            e[i] += prev;
        }
    }
    e.remove(0);
    e
}

/// A numeric value of the equivariant parameters `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub u: Rat,
    pub v: Rat,
}

impl Specialization {
    pub fn new(u: Rat, v: Rat) -> Self {
        Specialization { u, v }
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_1ee7;
const MAX_DRAWS: usize = 64;

/// Draws specializations of `(u, v)` from a seeded stream.
#[derive(Clone, Debug)]
pub struct SpecializationSampler {
    rng: ChaCha8Rng,
}

impl SpecializationSampler {
    pub fn new(seed: u64) -> Self {
        SpecializationSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Rational point with numerators and denominators of moderate size,
    /// avoiding zeros of every character in `forbidden`.
    pub fn draw(&mut self, forbidden: &[Character]) -> Result<Specialization, LocalizationError> {
        for _ in 0..MAX_DRAWS {
            let u = Rat::new(self.rng.random_range(-9973i64..=9973).into(), self.rng.random_range(1i64..=97).into());
            let v = Rat::new(self.rng.random_range(-9973i64..=9973).into(), self.rng.random_range(1i64..=97).into());
            let p = Specialization::new(u, v);
            if forbidden.iter().all(|c| !c.eval(&p.u, &p.v).is_zero()) {
                return Ok(p);
            }
        }
        Err(LocalizationError::NoSpecialization(MAX_DRAWS))
    }
}

/// Precomputed fixed-point data for one `(S, L, n)`.
#[derive(Clone, Debug)]
pub struct FixedLocus {
    n: u32,
    points: Vec<(WeightMultiset, WeightMultiset)>,
    distinct_tangent: Vec<Character>,
}

impl FixedLocus {
    pub fn new(bundle: &EquivariantLineBundle, n: u32) -> Self {
        let surface = bundle.surface();
        let points: Vec<_> = hilb_fixed_points(surface, n)
            .into_iter()
            .map(|p| (tangent_weights(surface, &p), taut_weights(&p, bundle)))
            .collect();
        let mut distinct: Vec<Character> = points.iter().flat_map(|(t, _)| t.0.iter().copied()).collect();
        distinct.sort();
        distinct.dedup();
        FixedLocus { n, points, distinct_tangent: distinct }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// All tangent characters occurring at any fixed point.
    pub fn tangent_characters(&self) -> &[Character] {
        &self.distinct_tangent
    }

    /// `sum_p class|_p / e(T_p)` at one specialization, with no degree
    /// filtering. For a homogeneous class of degree `d < 2n` this is exactly
    /// zero; for `d = 2n` it is the integral.
    pub fn equivariant_sum(&self, class: &TautologicalClass, at: &Specialization) -> Rat {
        assert_eq!(class.n(), self.n);
        self.points
            .par_iter()
            .map(|(tangent, taut)| {
                let tw = tangent.eval(at);
                let xw = taut.eval(at);
                let euler = tw.iter().fold(Rat::one(), |acc, w| acc * w);
                class.restrict(&xw, &tw) / euler
            })
            .reduce(Rat::zero, |a, b| a + b)
    }

    /// `int_{S^[n]} class`: the degree-`2n` part summed over fixed points,
    /// evaluated at two independent specializations which must agree.
    pub fn integrate(&self, class: &TautologicalClass, sampler: &mut SpecializationSampler) -> Result<Rat, LocalizationError> {
        let top = class.degree_part(2 * self.n);
        if top.poly().is_zero() {
            return Ok(Rat::zero());
        }
        let first = sampler.draw(&self.distinct_tangent)?;
        let mut second = sampler.draw(&self.distinct_tangent)?;
        while second == first {
            second = sampler.draw(&self.distinct_tangent)?;
        }
        let a = self.equivariant_sum(&top, &first);
        let b = self.equivariant_sum(&top, &second);
        if a != b {
            return Err(LocalizationError::Disagreement {
                first: crate::algebra::format_rat(&a),
                second: crate::algebra::format_rat(&b),
            });
        }
        Ok(a)
    }
}

/// `int_{S^[n]} integrand` by the fixed-point formula.
pub fn localization_integral(
    surface: &ToricSurfaceModel,
    bundle: &EquivariantLineBundle,
    integrand: &TautologicalClass,
    seed: u64,
) -> Result<Rat, LocalizationError> {
    if **bundle.surface() != *surface {
        return Err(LocalizationError::SurfaceMismatch { surface: surface.name(), bundle: bundle.surface().name() });
    }
    let locus = FixedLocus::new(bundle, integrand.n());
    locus.integrate(integrand, &mut SpecializationSampler::new(seed))
}

/// JSON-ready dump of the fixed points: one list of partitions per point.
pub fn fixed_point_dump(surface: &ToricSurfaceModel, n: u32) -> Vec<Vec<Vec<u32>>> {
    hilb_fixed_points(surface, n)
        .iter()
        .map(|p| p.partitions().iter().map(|l| l.parts().to_vec()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::algebra::rat;
    use crate::toric::EquivariantLineBundle;

    fn p2() -> Arc<ToricSurfaceModel> {
        Arc::new(ToricSurfaceModel::parse("P2").unwrap())
    }

    #[test]
    fn partition_basics() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::new(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::new(vec![3, 1]).conjugate().parts(), &[2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let all5: Vec<u32> = Partition::all(5).iter().map(Partition::size).collect();
        assert!(all5.iter().all(|&s| s == 5));
    }

    #[test]
    fn fixed_point_counts_on_p2() {
        let s = p2();
        assert_eq!(hilb_fixed_points(&s, 1).len(), 3);
        assert_eq!(hilb_fixed_points(&s, 2).len(), 9);
    }

    #[test]
    fn single_box_tangent_is_chart_tangent() {
        let s = p2();
        for (i, chart) in s.charts().iter().enumerate() {
            let mut a = vec![Partition::empty(); 3];
            a[i] = Partition::new(vec![1]);
            let t = tangent_weights(&s, &HilbFixedPoint::new(a));
            assert_eq!(t.0, chart.tangent_characters.to_vec());
        }
    }

    #[test]
    fn two_boxes_at_distinct_charts() {
        let s = p2();
        let a = vec![Partition::new(vec![1]), Partition::empty(), Partition::new(vec![1])];
        let t = tangent_weights(&s, &HilbFixedPoint::new(a));
        let mut expect: Vec<Character> = s.charts()[0].tangent_characters.to_vec();
        expect.extend(s.charts()[2].tangent_characters);
        expect.sort();
        assert_eq!(t.sorted(), expect);
    }

    #[test]
    fn row_of_two_has_arm_leg_weights() {
        let s = p2();
        let [t1, t2] = s.charts()[0].tangent_characters;
        let a = vec![Partition::new(vec![2]), Partition::empty(), Partition::empty()];
        let t = tangent_weights(&s, &HilbFixedPoint::new(a));
        let mut expect = vec![2 * t1, t2 - t1, t1, t2];
        expect.sort();
        assert_eq!(t.sorted(), expect);
    }

    #[test]
    fn taut_weights_examples() {
        let s = p2();
        let l = EquivariantLineBundle::parse(s.clone(), "2").unwrap();
        let a = vec![Partition::empty(), Partition::new(vec![1]), Partition::empty()];
        let p = HilbFixedPoint::new(a);
        assert_eq!(taut_weights(&p, &l).0, vec![l.chart_weight(1)]);

        let split = HilbFixedPoint::new(vec![Partition::new(vec![1]), Partition::empty(), Partition::new(vec![1])]);
        assert_eq!(taut_weights(&split, &l).0, vec![l.chart_weight(0), l.chart_weight(2)]);

        let chi = Character::new(2, -5);
        let shifted = taut_weights(&split, &l.retwist(chi));
        let base = taut_weights(&split, &l);
        assert_eq!(shifted.0, base.0.iter().map(|&w| w + chi).collect::<Vec<_>>());
    }

    #[test]
    fn weight_cardinalities() {
        let s = Arc::new(ToricSurfaceModel::parse("Bl2P2").unwrap());
        let l = EquivariantLineBundle::parse(s.clone(), "1,1").unwrap();
        for n in 0..=3 {
            for p in hilb_fixed_points(&s, n) {
                let t = tangent_weights(&s, &p);
                assert_eq!(t.len(), 2 * n as usize);
                assert!(t.0.iter().all(|c| !c.is_zero()));
                assert_eq!(taut_weights(&p, &l).len(), n as usize);
            }
        }
    }

    #[test]
    fn integral_of_c1_squared_on_surface() {
        let s = p2();
        for d in -2..=4 {
            let l = EquivariantLineBundle::parse(s.clone(), &d.to_string()).unwrap();
            let c1 = TautologicalClass::taut_chern(1, 1);
            let val = localization_integral(&s, &l, &c1.pow(2), 7).unwrap();
            assert_eq!(val, rat(d * d));
            // c1(T).c1(L) = beta.c1(S) pins the relative sign of tangent and fiber characters.
            let mixed = TautologicalClass::tangent_chern(1, 1).mul(&c1);
            assert_eq!(localization_integral(&s, &l, &mixed, 7).unwrap(), rat(3 * d));
        }
    }

    /// A section of `L` vanishing on a curve `C` induces one of `L^[n]`
    /// vanishing on `C^[n]`, so `c_n(L^[n])^2` counts length-`n` subsets of
    /// the `d^2` points of `C` meeting a second curve.
    #[test]
    fn top_taut_class_squared_counts_subsets_of_intersection_points() {
        let s = p2();
        for (d, n, expect) in [(2, 2, 6), (3, 2, 36), (2, 3, 4), (3, 3, 84)] {
            let l = EquivariantLineBundle::new(s.clone(), vec![vec![d, 0, 0]]).unwrap();
            let top = TautologicalClass::taut_chern(n, n).pow(2);
            assert_eq!(localization_integral(&s, &l, &top, 11).unwrap(), rat(expect), "d={d} n={n}");
        }
    }

    /// On `C^[2] = C^(2)` for a plane curve of degree `d` and genus `g`,
    /// `c1(L^[2]) = (d^2 - g - 1) x + theta`, with `x^2 = 1`, `x theta = g`,
    /// `theta^2 = g(g-1)`.
    #[test]
    fn c1_squared_on_curve_symmetric_square() {
        let s = p2();
        for d in 1i64..=4 {
            let g = (d - 1) * (d - 2) / 2;
            let a = d * d - g - 1;
            let expect = a * a + 2 * a * g + g * (g - 1);
            let l = EquivariantLineBundle::new(s.clone(), vec![vec![d, 0, 0]]).unwrap();
            let class = TautologicalClass::taut_chern(2, 2).mul(&TautologicalClass::taut_chern(2, 1).pow(2));
            assert_eq!(localization_integral(&s, &l, &class, 5).unwrap(), rat(expect), "d={d}");
        }
    }

    #[test]
    fn euler_class_counts_fixed_points_on_hilb2() {
        let s = p2();
        let l = EquivariantLineBundle::parse(s.clone(), "0").unwrap();
        let e = TautologicalClass::tangent_chern(2, 4);
        assert_eq!(localization_integral(&s, &l, &e, 1).unwrap(), rat(9));
    }

    #[test]
    fn low_degree_classes_integrate_to_zero() {
        let s = p2();
        let l = EquivariantLineBundle::parse(s.clone(), "1").unwrap();
        let c = TautologicalClass::taut_chern(2, 1).mul(&TautologicalClass::tangent_chern(2, 2));
        assert_eq!(localization_integral(&s, &l, &c, 3).unwrap(), rat(0));
        let locus = FixedLocus::new(&l, 2);
        let at = SpecializationSampler::new(9).draw(locus.tangent_characters()).unwrap();
        assert_eq!(locus.equivariant_sum(&c, &at), rat(0));
    }

    #[test]
    fn rejects_bundle_on_other_surface() {
        let s = p2();
        let other = Arc::new(ToricSurfaceModel::parse("F0").unwrap());
        let l = EquivariantLineBundle::parse(other, "1,1").unwrap();
        let r = localization_integral(&s, &l, &TautologicalClass::one(1), 0);
        assert!(matches!(r, Err(LocalizationError::SurfaceMismatch { .. })));
    }

    #[test]
    fn elementary_symmetric_small() {
        let e = elementary_symmetric(&[rat(1), rat(2), rat(3)], 4);
        assert_eq!(e, vec![rat(6), rat(11), rat(6), rat(0)]);
    }

    #[test]
    fn dump_shape() {
        let d = fixed_point_dump(&p2(), 1);
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], vec![vec![1], vec![], vec![]]);
    }
}
