//! Exterior algebra over `H^1(S, Z)`: wedge invariants and the Picard
//! pushforward coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::rational::to_i64;
use crate::algebra::{rat, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("b1 = {0} must be even")]
    OddB1(usize),
    #[error("b1 = {0} is too large (at most 32 supported)")]
    TooLarge(usize),
    #[error("{0}")]
    Shape(String),
    #[error("{name} is not antisymmetric at ({a}, {b})")]
    NotAntisymmetric { name: &'static str, a: usize, b: usize },
    #[error("T_one key `{0}` is not a strictly increasing 4-tuple of basis indices")]
    BadKey(String),
    #[error("the basis must be declared oriented")]
    Unoriented,
    #[error("p_* is only defined for (1, id^4), (beta, id^2) and (c1, id^2), not ({alpha}, id^{power})")]
    BadPushforward { alpha: String, power: u32 },
    #[error("wedge value {0} is not an integer")]
    NonInteger(String),
}

/// A form on `dim` odd generators, keyed by bitmask of the generators it
/// contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem {
    dim: usize,
    terms: BTreeMap<u64, Rat>,
}

fn indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Sign of `e_A ^ e_B` against the sorted monomial, or `None` if they
/// share a generator.
fn wedge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

impl ExtElem {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 64, "at most 64 generators");
        ExtElem { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::zero(dim).plus_term(0, Rat::one())
    }

    /// `c * e_{i1} ^ ... ^ e_{ir}` in the given order.
    pub fn monomial(dim: usize, idx: &[usize], c: Rat) -> Self {
        let mut out = Self::one(dim);
        for &i in idx {
            assert!(i < dim, "generator {i} out of range");
            out = out.wedge(&Self::zero(dim).plus_term(1 << i, Rat::one()));
        }
        out.scale(&c)
    }

    fn plus_term(mut self, mask: u64, c: Rat) -> Self {
        let e = self.terms.entry(mask).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero coefficients with strictly increasing index tuples.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rat)> {
        self.terms.iter().map(|(m, c)| (indices(*m), c))
    }

    pub fn coefficient(&self, idx: &[usize]) -> Rat {
        let mask = idx.iter().fold(0u64, |m, i| m | 1 << i);
        self.terms.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `e_0 ^ ... ^ e_{dim-1}`.
    pub fn top_coefficient(&self) -> Rat {
        let top = if self.dim == 64 { u64::MAX } else { (1u64 << self.dim) - 1 };
        self.terms.get(&top).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &ExtElem) -> ExtElem {
        assert_eq!(self.dim, other.dim);
        other.terms.iter().fold(self.clone(), |acc, (m, c)| acc.plus_term(*m, c.clone()))
    }

    pub fn scale(&self, c: &Rat) -> ExtElem {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        ExtElem { dim: self.dim, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn wedge(&self, other: &ExtElem) -> ExtElem {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(neg) = wedge_sign(*a, *b) {
                    let c = x * y;
                    out = out.plus_term(a | b, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ExtElem {
        (0..e).fold(Self::one(self.dim), |acc, _| acc.wedge(self))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(idx, c)| {
                let name: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                format!("{}*e{}", crate::algebra::format_rat(c), name.join("_"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer data of `H^1(S, Z)` paired against `beta`, `c1(S)` and `1`.
///
/// `t_one` holds `int e_a e_b e_c e_d` for strictly increasing 0-based
/// indices; the remaining entries follow by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Model {
    pub b1: usize,
    pub m_beta: Vec<Vec<i64>>,
    pub m_c1: Vec<Vec<i64>>,
    pub t_one: BTreeMap<[usize; 4], i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct H1ModelJson {
    b1: usize,
    #[serde(rename = "M_beta")]
    m_beta: Vec<Vec<i64>>,
    #[serde(rename = "M_c1")]
    m_c1: Vec<Vec<i64>>,
    #[serde(rename = "T_one")]
    t_one: BTreeMap<String, i64>,
    oriented_basis: bool,
}

fn parse_key(key: &str, b1: usize) -> Result<[usize; 4], ExteriorError> {
    let bad = || ExteriorError::BadKey(key.to_string());
    let digits: Vec<usize> = if key.contains(',') {
        key.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_, _>>()?
    } else {
        key.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
    };
    if digits.len() != 4 || digits.iter().any(|&d| d == 0 || d > b1) || digits.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad());
    }
    Ok([digits[0] - 1, digits[1] - 1, digits[2] - 1, digits[3] - 1])
}

fn format_key(key: &[usize; 4], b1: usize) -> String {
    let one_based = key.iter().map(|i| (i + 1).to_string());
    if b1 <= 9 {
        one_based.collect()
    } else {
        one_based.collect::<Vec<_>>().join(",")
    }
}

impl H1Model {
    pub fn new(
        b1: usize,
        m_beta: Vec<Vec<i64>>,
        m_c1: Vec<Vec<i64>>,
        t_one: BTreeMap<[usize; 4], i64>,
    ) -> Result<Self, ExteriorError> {
        let m = H1Model { b1, m_beta, m_c1, t_one: t_one.into_iter().filter(|(_, v)| *v != 0).collect() };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), ExteriorError> {
        if !self.b1.is_multiple_of(2) {
            return Err(ExteriorError::OddB1(self.b1));
        }
        if self.b1 > 32 {
            return Err(ExteriorError::TooLarge(self.b1));
        }
        for (name, m) in [("M_beta", &self.m_beta), ("M_c1", &self.m_c1)] {
            if m.len() != self.b1 || m.iter().any(|r| r.len() != self.b1) {
                return Err(ExteriorError::Shape(format!("{name} must be {0}x{0}", self.b1)));
            }
            for a in 0..self.b1 {
                for b in 0..self.b1 {
                    if m[a][b] != -m[b][a] {
                        return Err(ExteriorError::NotAntisymmetric { name, a: a + 1, b: b + 1 });
                    }
                }
            }
        }
        for key in self.t_one.keys() {
            if key.iter().any(|&i| i >= self.b1) || key.windows(2).any(|w| w[0] >= w[1]) {
                return Err(ExteriorError::BadKey(format!("{key:?}")));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let raw: H1ModelJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        Self::from_raw(raw).map_err(|e| e.to_string())
    }

    fn from_raw(raw: H1ModelJson) -> Result<Self, ExteriorError> {
        if !raw.oriented_basis {
            return Err(ExteriorError::Unoriented);
        }
        let mut t = BTreeMap::new();
        for (k, v) in &raw.t_one {
            t.insert(parse_key(k, raw.b1)?, *v);
        }
        H1Model::new(raw.b1, raw.m_beta, raw.m_c1, t)
    }

    fn to_raw(&self) -> H1ModelJson {
        H1ModelJson {
            b1: self.b1,
            m_beta: self.m_beta.clone(),
            m_c1: self.m_c1.clone(),
            t_one: self.t_one.iter().map(|(k, v)| (format_key(k, self.b1), *v)).collect(),
            oriented_basis: true,
        }
    }

    /// `int alpha ^ e_I` for the S-side class `alpha` and sorted `I`.
    fn integrate(&self, alpha: PicClass, idx: &[usize]) -> i64 {
        match (alpha, idx) {
            (PicClass::Beta, [a, b]) => self.m_beta[*a][*b],
            (PicClass::C1, [a, b]) => self.m_c1[*a][*b],
            (PicClass::One, [a, b, c, d]) => self.t_one.get(&[*a, *b, *c, *d]).copied().unwrap_or(0),
            _ => 0,
        }
    }

    fn two_form(&self, m: &[Vec<i64>]) -> ExtElem {
        let mut out = ExtElem::zero(self.b1);
        for a in 0..self.b1 {
            for b in a + 1..self.b1 {
                if m[a][b] != 0 {
                    out = out.add(&ExtElem::monomial(self.b1, &[a, b], rat(m[a][b])));
                }
            }
        }
        out
    }

    /// `[beta]` in `Lambda^2 H^1*`.
    pub fn beta_class(&self) -> ExtElem {
        self.two_form(&self.m_beta)
    }

    /// `[c1(S)]` in `Lambda^2 H^1*`.
    pub fn c1_class(&self) -> ExtElem {
        self.two_form(&self.m_c1)
    }

    /// `[1]` in `Lambda^4 H^1*`.
    pub fn one_class(&self) -> ExtElem {
        let mut out = ExtElem::zero(self.b1);
        for (k, v) in &self.t_one {
            out = out.add(&ExtElem::monomial(self.b1, k, rat(*v)));
        }
        out
    }
}

impl Serialize for H1Model {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for H1Model {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        H1Model::from_raw(H1ModelJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// `w_{ijk}` for `2i + 2j + 4k = b1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeInvariantSet {
    pub b1: usize,
    pub values: BTreeMap<(u32, u32, u32), i64>,
}

impl WedgeInvariantSet {
    pub fn get(&self, i: u32, j: u32, k: u32) -> Option<i64> {
        self.values.get(&(i, j, k)).copied()
    }

    /// `{"(i,j,k)": w, ...}`
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .values
            .iter()
            .map(|((i, j, k), w)| (format!("({i},{j},{k})"), serde_json::Value::from(*w)))
            .collect();
        serde_json::Value::Object(map)
    }
}

pub fn wedge_invariants(model: &H1Model) -> Result<WedgeInvariantSet, ExteriorError> {
    model.validate()?;
    let half = (model.b1 / 2) as u32;
    let (beta, c1, one) = (model.beta_class(), model.c1_class(), model.one_class());
    let mut values = BTreeMap::new();
    for k in 0..=half / 2 {
        let one_k = one.pow(k);
        for i in 0..=half - 2 * k {
            let j = half - 2 * k - i;
            let w = beta.pow(i).wedge(&c1.pow(j)).wedge(&one_k).top_coefficient();
            let w = to_i64(&w).ok_or_else(|| ExteriorError::NonInteger(w.to_string()))?;
            values.insert((i, j, k), w);
        }
    }
    Ok(WedgeInvariantSet { b1: model.b1, values })
}

/// The S-side class multiplying a power of `id` under `p_*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PicClass {
    One,
    Beta,
    C1,
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PicClass::One => "1",
            PicClass::Beta => "beta",
            PicClass::C1 => "c1",
        })
    }
}

impl std::str::FromStr for PicClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" | "one" => Ok(PicClass::One),
            "beta" => Ok(PicClass::Beta),
            "c1" => Ok(PicClass::C1),
            _ => Err(format!("unknown class `{s}` (expected 1, beta or c1)")),
        }
    }
}

/// `p_*(alpha . id^power)` along `S x Pic -> Pic`.
///
/// Computed in `Lambda(H^1) (x) Lambda(H^1*)`, modelled as one exterior
/// algebra on `e_0..e_{b-1}, f_0..f_{b-1}` so the Koszul sign of the tensor
/// product is the ordinary wedge sign. `id = sum_a e_a ^ f_a`. Each term
/// `e_I ^ f_J` pushes forward to `(int alpha e_I) f_J`.
pub fn pic_pushforward(model: &H1Model, alpha: PicClass, power: u32) -> Result<ExtElem, ExteriorError> {
    model.validate()?;
    match (alpha, power) {
        (PicClass::One, 4) | (PicClass::Beta, 2) | (PicClass::C1, 2) => {}
        _ => return Err(ExteriorError::BadPushforward { alpha: alpha.to_string(), power }),
    }
    let b = model.b1;
    let mut id = ExtElem::zero(2 * b);
    for a in 0..b {
        id = id.add(&ExtElem::monomial(2 * b, &[a, b + a], Rat::one()));
    }
    let s_mask = (1u64 << b) - 1;
    let mut out = ExtElem::zero(b);
    for (mask, c) in &id.pow(power).terms {
        let (s_part, pic_part) = (mask & s_mask, mask >> b);
        let weight = model.integrate(alpha, &indices(s_part));
        if weight != 0 {
            // Sorted keys already place every e before every f.
            out = out.plus_term(pic_part, c * rat(weight));
        }
    }
    Ok(out)
}

/// `Sigma_g x P^1` in the basis `a_1, b_1, ..., a_g, b_g`, with
/// `beta = beta_1 [pt x P^1] + beta_2 [Sigma_g x pt]` contributing
/// `int beta a_i b_i = beta_2`.
pub fn product_curve_p1(g: usize, beta2: i64) -> H1Model {
    let b1 = 2 * g;
    let mut m_beta = vec![vec![0; b1]; b1];
    let mut m_c1 = vec![vec![0; b1]; b1];
    for i in 0..g {
        let (a, b) = (2 * i, 2 * i + 1);
        m_beta[a][b] = beta2;
        m_beta[b][a] = -beta2;
        m_c1[a][b] = 2;
        m_c1[b][a] = -2;
    }
    H1Model::new(b1, m_beta, m_c1, BTreeMap::new()).expect("product model is valid")
}

/// Abelian surface with `int e_1 e_2 e_3 e_4 = 1` and
/// `beta = sum_{a<b} B_ab e_a e_b`.
pub fn abelian(b: &[[i64; 4]; 4]) -> Result<H1Model, ExteriorError> {
    for x in 0..4 {
        for y in 0..4 {
            if b[x][y] != -b[y][x] {
                return Err(ExteriorError::NotAntisymmetric { name: "B", a: x + 1, b: y + 1 });
            }
        }
    }
    let mut beta = ExtElem::zero(4);
    for x in 0..4 {
        for y in x + 1..4 {
            beta = beta.add(&ExtElem::monomial(4, &[x, y], rat(b[x][y])));
        }
    }
    let mut m_beta = vec![vec![0; 4]; 4];
    for x in 0..4 {
        for y in 0..4 {
            if x != y {
                let v = beta.wedge(&ExtElem::monomial(4, &[x, y], Rat::one())).top_coefficient();
                m_beta[x][y] = to_i64(&v).expect("integral");
            }
        }
    }
    H1Model::new(4, m_beta, vec![vec![0; 4]; 4], [([0, 1, 2, 3], 1)].into_iter().collect())
}

/// `beta = e_1 e_2 + e_3 e_4`, a principal polarization.
pub const STANDARD_ABELIAN_BETA: [[i64; 4]; 4] = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]];

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sign_rules() {
        let e = |i: &[usize]| ExtElem::monomial(3, i, Rat::one());
        assert_eq!(e(&[1, 0]), e(&[0, 1]).scale(&rat(-1)));
        assert!(e(&[0, 0]).is_zero());
        assert_eq!(e(&[2, 0, 1]), e(&[0, 1, 2]));
        assert_eq!(e(&[1, 0, 2]), e(&[0, 1, 2]).scale(&rat(-1)));
    }

    #[test]
    fn product_examples() {
        let w = wedge_invariants(&product_curve_p1(1, 5)).unwrap();
        assert_eq!(w.get(1, 0, 0), Some(5));
        assert_eq!(w.get(0, 1, 0), Some(2));
        let w = wedge_invariants(&product_curve_p1(2, 1)).unwrap();
        assert_eq!(w.get(0, 2, 0), Some(8));
        assert_eq!(w.get(1, 1, 0), Some(4));
        assert_eq!(w.get(2, 0, 0), Some(2));
        assert_eq!(w.get(0, 0, 1), Some(0));
        assert!(product_curve_p1(1, 5).t_one.is_empty());
    }

    #[test]
    fn abelian_examples() {
        let m = abelian(&STANDARD_ABELIAN_BETA).unwrap();
        let w = wedge_invariants(&m).unwrap();
        assert_eq!(w.get(0, 0, 1), Some(1));
        assert_eq!(w.get(0, 2, 0), Some(0));
        assert_eq!(w.get(2, 0, 0), Some(2));
    }

    #[test]
    fn pushforward_coefficients() {
        let m = abelian(&STANDARD_ABELIAN_BETA).unwrap();
        assert_eq!(pic_pushforward(&m, PicClass::Beta, 2).unwrap(), m.beta_class().scale(&rat(-2)));
        assert_eq!(pic_pushforward(&m, PicClass::One, 4).unwrap(), m.one_class().scale(&rat(24)));
        let p = product_curve_p1(2, 3);
        assert_eq!(pic_pushforward(&p, PicClass::C1, 2).unwrap(), p.c1_class().scale(&rat(-2)));
        assert!(pic_pushforward(&p, PicClass::One, 2).is_err());
        assert!(pic_pushforward(&p, PicClass::Beta, 4).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let m = abelian(&STANDARD_ABELIAN_BETA).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains("\"1234\":1"));
        assert_eq!(H1Model::from_json(&text).unwrap(), m);
        assert!(H1Model::from_json(&text.replace("\"1234\"", "\"1243\"")).is_err());
        assert!(H1Model::from_json(&text.replace("true", "false")).is_err());
        let odd = r#"{"b1":1,"M_beta":[[0]],"M_c1":[[0]],"T_one":{},"oriented_basis":true}"#;
        assert!(H1Model::from_json(odd).is_err());
        let asym = r#"{"b1":2,"M_beta":[[0,1],[1,0]],"M_c1":[[0,0],[0,0]],"T_one":{},"oriented_basis":true}"#;
        assert!(H1Model::from_json(asym).is_err());
    }

    /// `e'_a = sum_b P_ab e_b` with `det P = 1`, from products of
    /// elementary matrices.
    fn random_sl(rng: &mut impl rand::Rng, n: usize) -> Vec<Vec<i64>> {
        let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for _ in 0..6 {
            let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
            if i != j {
                let c = rng.random_range(-2..=2);
                for k in 0..n {
                    p[i][k] += c * p[j][k];
                }
            }
        }
        p
    }

    fn change_basis(m: &H1Model, p: &[Vec<i64>]) -> H1Model {
        let b = m.b1;
        let conj = |x: &[Vec<i64>]| -> Vec<Vec<i64>> {
            (0..b)
                .map(|a| (0..b).map(|c| (0..b).flat_map(|i| (0..b).map(move |j| (i, j))).map(|(i, j)| p[a][i] * p[c][j] * x[i][j]).sum()).collect())
                .collect()
        };
        // T'(I) = int e'_I, read off the model's [1] as a 4-form on H^1.
        let one = |idx: &[usize]| -> i64 {
            let mut form = ExtElem::one(b);
            for &a in idx {
                let mut row = ExtElem::zero(b);
                for (i, &c) in p[a].iter().enumerate() {
                    row = row.add(&ExtElem::monomial(b, &[i], rat(c)));
                }
                form = form.wedge(&row);
            }
            form.terms().map(|(k, c)| to_i64(c).unwrap() * m.t_one.get(&[k[0], k[1], k[2], k[3]]).copied().unwrap_or(0)).sum()
        };
        let mut t = BTreeMap::new();
        for a in 0..b {
            for c in a + 1..b {
                for d in c + 1..b {
                    for e in d + 1..b {
                        t.insert([a, c, d, e], one(&[a, c, d, e]));
                    }
                }
            }
        }
        H1Model::new(b, conj(&m.m_beta), conj(&m.m_c1), t).unwrap()
    }

    #[test]
    fn wedge_invariants_survive_oriented_basis_changes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let models = [product_curve_p1(2, 3), abelian(&STANDARD_ABELIAN_BETA).unwrap(), product_curve_p1(3, -1)];
        for m in &models {
            let w = wedge_invariants(m).unwrap();
            for _ in 0..4 {
                let p = random_sl(&mut rng, m.b1);
                let changed = change_basis(m, &p);
                assert_eq!(wedge_invariants(&changed).unwrap(), w);
            }
        }
        let ab = abelian(&STANDARD_ABELIAN_BETA).unwrap();
        let mut flip: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| i64::from(i == j)).collect()).collect();
        flip[0][0] = -1;
        assert_eq!(wedge_invariants(&change_basis(&ab, &flip)).unwrap().get(0, 0, 1), Some(-1));
    }

    proptest! {
        #[test]
        fn wedge_is_associative(
            a in prop::collection::vec((0u64..64, -3i64..4), 0..5),
            b in prop::collection::vec((0u64..64, -3i64..4), 0..5),
            c in prop::collection::vec((0u64..64, -3i64..4), 0..5),
        ) {
            let mk = |t: &[(u64, i64)]| t.iter().fold(ExtElem::zero(6), |acc, (m, x)| acc.plus_term(*m, rat(*x)));
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        }
    }
}
