//! Smooth projective toric surfaces, finite disjoint unions of them, and
//! torus-equivariant line bundles on them.
//!
//! A connected piece is given by its fan: primitive rays `v_0, ..., v_{r-1}`
//! in counterclockwise order with `det(v_i, v_{i+1}) = 1`. Chart `i` is the
//! cone spanned by `v_i` and `v_{i+1}`; its fixed point is where the torus
//! divisors `D_i` and `D_{i+1}` meet.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("unsupported surface descriptor `{0}`")]
    UnsupportedDescriptor(String),
    #[error("bundle has {got} coefficient lists but the surface has {want} components")]
    ComponentMismatch { got: usize, want: usize },
    #[error("component {component}: {got} divisor coefficients given, surface has only {max} torus divisors")]
    TooManyCoefficients { component: usize, got: usize, max: usize },
    #[error("malformed bundle `{0}`")]
    BadBundle(String),
    #[error("fan is not smooth and complete: {0}")]
    BadFan(String),
}

/// A character of the two-torus, read as the linear form `u*self.u + v*self.v`
/// in the equivariant parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    pub u: i64,
    pub v: i64,
}

impl Character {
    pub const ZERO: Character = Character { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        Character { u, v }
    }

    pub fn is_zero(self) -> bool {
        self == Character::ZERO
    }

    pub fn eval(self, u: &Rat, v: &Rat) -> Rat {
        u * Rat::from_integer(self.u.into()) + v * Rat::from_integer(self.v.into())
    }

    fn dot(self, ray: [i64; 2]) -> i64 {
        self.u * ray[0] + self.v * ray[1]
    }

    /// Whether `self` is a rational multiple of `other`.
    pub fn is_parallel_to(self, other: Character) -> bool {
        self.u * other.v - self.v * other.u == 0
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        Character::new(self.u + o.u, self.v + o.v)
    }
}

impl Sub for Character {
    type Output = Character;
    fn sub(self, o: Character) -> Character {
        Character::new(self.u - o.u, self.v - o.v)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character::new(-self.u, -self.v)
    }
}

impl Mul<Character> for i64 {
    type Output = Character;
    fn mul(self, c: Character) -> Character {
        Character::new(self * c.u, self * c.v)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, name) in [(self.u, "u"), (self.v, "v")] {
            match k {
                0 => {}
                1 => parts.push(format!("+{name}")),
                -1 => parts.push(format!("-{name}")),
                k => parts.push(format!("{k:+}{name}")),
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let s = parts.concat();
        write!(f, "{}", s.strip_prefix('+').unwrap_or(&s))
    }
}

/// A torus-fixed point together with the two tangent weights there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedChart {
    pub id: usize,
    pub component: usize,
    pub tangent_characters: [Character; 2],
}

/// Catalog entry for a test surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceDescriptor {
    P2,
    Hirzebruch(u32),
    /// Blowup of up to three distinct torus-fixed points of a connected base.
    Blowup { base: Box<SurfaceDescriptor>, points: u8 },
    DisjointUnion(Vec<SurfaceDescriptor>),
}

impl SurfaceDescriptor {
    fn is_connected(&self) -> bool {
        !matches!(self, SurfaceDescriptor::DisjointUnion(_))
    }

    fn connected_rays(&self) -> Result<Vec<[i64; 2]>, ToricError> {
        match self {
            SurfaceDescriptor::P2 => Ok(vec![[1, 0], [0, 1], [-1, -1]]),
            SurfaceDescriptor::Hirzebruch(a) => Ok(vec![[1, 0], [0, 1], [-1, *a as i64], [0, -1]]),
            SurfaceDescriptor::Blowup { base, points } => {
                if !base.is_connected() || matches!(**base, SurfaceDescriptor::Blowup { .. }) {
                    return Err(ToricError::UnsupportedDescriptor(self.to_string()));
                }
                let mut rays = base.connected_rays()?;
                if *points as usize > 3 || *points as usize > rays.len() {
                    return Err(ToricError::UnsupportedDescriptor(self.to_string()));
                }
                // Insert v_j + v_{j+1} for the first `points` original cones; going
                // backwards keeps the earlier indices valid.
                for j in (0..*points as usize).rev() {
                    let r = rays.len();
                    let (a, b) = (rays[j], rays[(j + 1) % r]);
                    rays.insert(j + 1, [a[0] + b[0], a[1] + b[1]]);
                }
                Ok(rays)
            }
            SurfaceDescriptor::DisjointUnion(_) => {
                Err(ToricError::UnsupportedDescriptor(self.to_string()))
            }
        }
    }

    pub fn pieces(&self) -> Vec<&SurfaceDescriptor> {
        match self {
            SurfaceDescriptor::DisjointUnion(ps) => ps.iter().collect(),
            other => vec![other],
        }
    }
}

impl fmt::Display for SurfaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceDescriptor::P2 => write!(f, "P2"),
            SurfaceDescriptor::Hirzebruch(a) => write!(f, "F{a}"),
            SurfaceDescriptor::Blowup { base, points } => write!(f, "Bl{points}{base}"),
            SurfaceDescriptor::DisjointUnion(ps) => {
                let names: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join("+"))
            }
        }
    }
}

impl FromStr for SurfaceDescriptor {
    type Err = ToricError;

    fn from_str(s: &str) -> Result<Self, ToricError> {
        let unsupported = || ToricError::UnsupportedDescriptor(s.to_string());
        let pieces: Vec<&str> = s.split('+').map(str::trim).collect();
        if pieces.len() > 1 {
            let parsed = pieces
                .iter()
                .map(|p| parse_connected(p).ok_or_else(unsupported))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(SurfaceDescriptor::DisjointUnion(parsed));
        }
        parse_connected(s.trim()).ok_or_else(unsupported)
    }
}

fn parse_connected(s: &str) -> Option<SurfaceDescriptor> {
    if s == "P2" {
        return Some(SurfaceDescriptor::P2);
    }
    if let Some(a) = s.strip_prefix('F') {
        return a.parse().ok().map(SurfaceDescriptor::Hirzebruch);
    }
    let rest = s.strip_prefix("Bl")?;
    let digit = rest.chars().next()?.to_digit(10)?;
    let base = parse_connected(&rest[1..])?;
    if matches!(base, SurfaceDescriptor::Blowup { .. }) || !(1..=3).contains(&digit) {
        return None;
    }
    Some(SurfaceDescriptor::Blowup { base: Box::new(base), points: digit as u8 })
}

/// One connected smooth projective toric surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricComponent {
    rays: Vec<[i64; 2]>,
    self_intersections: Vec<i64>,
    first_chart: usize,
}

impl ToricComponent {
    fn from_rays(rays: Vec<[i64; 2]>, first_chart: usize) -> Result<Self, ToricError> {
        let r = rays.len();
        if r < 3 {
            return Err(ToricError::BadFan(format!("{r} rays")));
        }
        let mut self_intersections = Vec::with_capacity(r);
        for i in 0..r {
            let (a, b) = (rays[i], rays[(i + 1) % r]);
            if a[0] * b[1] - a[1] * b[0] != 1 {
                return Err(ToricError::BadFan(format!("cone {i} is not unimodular")));
            }
            let prev = rays[(i + r - 1) % r];
            let next = rays[(i + 1) % r];
            let s = [prev[0] + next[0], prev[1] + next[1]];
            // s = -D_i^2 * v_i
            let k = if a[0] != 0 { s[0] / a[0] } else { s[1] / a[1] };
            if s[0] != k * a[0] || s[1] != k * a[1] {
                return Err(ToricError::BadFan(format!("ray {i} relation fails")));
            }
            self_intersections.push(-k);
        }
        if self_intersections.iter().sum::<i64>() != 12 - 3 * r as i64 {
            return Err(ToricError::BadFan("rays wind more than once".into()));
        }
        Ok(ToricComponent { rays, self_intersections, first_chart })
    }

    pub fn rays(&self) -> &[[i64; 2]] {
        &self.rays
    }

    pub fn num_divisors(&self) -> usize {
        self.rays.len()
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_intersections
    }

    /// Intersection number `D_i . D_j` of torus divisors.
    pub fn divisor_intersection(&self, i: usize, j: usize) -> i64 {
        let r = self.rays.len();
        if i == j {
            self.self_intersections[i]
        } else if (i + 1) % r == j || (j + 1) % r == i {
            1
        } else {
            0
        }
    }

    /// Dual basis `(m1, m2)` of the cone `(v_i, v_{i+1})`: the characters of
    /// the two chart coordinates.
    fn dual_basis(&self, i: usize) -> (Character, Character) {
        let r = self.rays.len();
        let (a, c) = (self.rays[i], self.rays[(i + 1) % r]);
        (Character::new(c[1], -c[0]), Character::new(-a[1], a[0]))
    }

    pub fn c1_sq(&self) -> i64 {
        12 - self.rays.len() as i64
    }

    pub fn c2(&self) -> i64 {
        self.rays.len() as i64
    }

    /// Lattice points `m` with `<m, v_j> >= -a_j` for every ray.
    fn polytope_points(&self, coeffs: &[i64]) -> u64 {
        let amax = coeffs.iter().map(|a| a.abs()).max().unwrap_or(0);
        let vmax = self.rays.iter().flatten().map(|x| x.abs()).max().unwrap_or(1);
        // Every vertex solves a 2x2 system with |det| >= 1.
        let bound = 2 * amax * vmax + 1;
        let mut count = 0;
        for x in -bound..=bound {
            for y in -bound..=bound {
                let m = Character::new(x, y);
                if self.rays.iter().zip(coeffs).all(|(ray, a)| m.dot(*ray) >= -a) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// A possibly disconnected smooth projective toric surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSurfaceModel {
    descriptor: SurfaceDescriptor,
    components: Vec<ToricComponent>,
    charts: Vec<FixedChart>,
}

impl ToricSurfaceModel {
    pub fn build(descriptor: &SurfaceDescriptor) -> Result<Self, ToricError> {
        let mut components = Vec::new();
        let mut charts = Vec::new();
        for piece in descriptor.pieces() {
            let comp = ToricComponent::from_rays(piece.connected_rays()?, charts.len())?;
            for i in 0..comp.num_divisors() {
                let (m1, m2) = comp.dual_basis(i);
                charts.push(FixedChart {
                    id: charts.len(),
                    component: components.len(),
                    tangent_characters: [-m1, -m2],
                });
            }
            components.push(comp);
        }
        Ok(ToricSurfaceModel { descriptor: descriptor.clone(), components, charts })
    }

    pub fn parse(s: &str) -> Result<Self, ToricError> {
        ToricSurfaceModel::build(&s.parse()?)
    }

    pub fn descriptor(&self) -> &SurfaceDescriptor {
        &self.descriptor
    }

    pub fn name(&self) -> String {
        self.descriptor.to_string()
    }

    pub fn components(&self) -> &[ToricComponent] {
        &self.components
    }

    pub fn charts(&self) -> &[FixedChart] {
        &self.charts
    }

    pub fn c1_sq(&self) -> i64 {
        self.components.iter().map(ToricComponent::c1_sq).sum()
    }

    pub fn c2(&self) -> i64 {
        self.components.iter().map(ToricComponent::c2).sum()
    }

    /// Holomorphic Euler characteristic: one per rational component.
    pub fn chi_o(&self) -> i64 {
        self.components.len() as i64
    }
}

/// `beta^2` and `beta . c_1(S)` for `beta = c_1(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassData {
    pub beta_sq: i64,
    pub beta_c1: i64,
}

/// A torus-invariant divisor `sum a_i D_i` on each component, with the
/// linearization whose fiber character at chart `sigma` is the `m_sigma`
/// satisfying `<m_sigma, v> = -a` on both rays of `sigma`, shifted by an
/// optional global twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantLineBundle {
    surface: Arc<ToricSurfaceModel>,
    coefficients: Vec<Vec<i64>>,
    chart_weights: Vec<Character>,
}

impl EquivariantLineBundle {
    /// Divisor coefficients per component; shorter lists are padded with
    /// zeros, so `[[3]]` on `P2` is `O(3)` and `[[a, b]]` on `F0` is `O(a, b)`.
    pub fn new(surface: Arc<ToricSurfaceModel>, coefficients: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        let comps = surface.components();
        if coefficients.len() != comps.len() {
            return Err(ToricError::ComponentMismatch { got: coefficients.len(), want: comps.len() });
        }
        let mut padded = Vec::with_capacity(comps.len());
        for (idx, (comp, list)) in comps.iter().zip(coefficients).enumerate() {
            let r = comp.num_divisors();
            if list.len() > r {
                return Err(ToricError::TooManyCoefficients { component: idx, got: list.len(), max: r });
            }
            let mut a = list;
            a.resize(r, 0);
            padded.push(a);
        }
        let mut chart_weights = Vec::with_capacity(surface.charts().len());
        for (comp, a) in comps.iter().zip(&padded) {
            let r = comp.num_divisors();
            for i in 0..r {
                let (m1, m2) = comp.dual_basis(i);
                chart_weights.push(-a[i] * m1 - a[(i + 1) % r] * m2);
            }
        }
        Ok(EquivariantLineBundle { surface, coefficients: padded, chart_weights })
    }

    /// Parses the command-line form: comma-separated coefficients, one
    /// `+`-separated group per component (`"3"`, `"1,1"`, `"3+1,1"`).
    pub fn parse(surface: Arc<ToricSurfaceModel>, s: &str) -> Result<Self, ToricError> {
        let groups = s
            .split('+')
            .map(|g| {
                let g = g.trim();
                if g.is_empty() {
                    return Ok(Vec::new());
                }
                g.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|_| ToricError::BadBundle(s.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        EquivariantLineBundle::new(surface, groups)
    }

    pub fn surface(&self) -> &Arc<ToricSurfaceModel> {
        &self.surface
    }

    pub fn coefficients(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    pub fn chart_weights(&self) -> &[Character] {
        &self.chart_weights
    }

    pub fn chart_weight(&self, chart: usize) -> Character {
        self.chart_weights[chart]
    }

    /// Same underlying bundle with every fixed-point character shifted.
    pub fn retwist(&self, character: Character) -> Self {
        EquivariantLineBundle {
            surface: self.surface.clone(),
            coefficients: self.coefficients.clone(),
            chart_weights: self.chart_weights.iter().map(|&w| w + character).collect(),
        }
    }

    /// Weights at the two ends of each invariant curve differ by a multiple
    /// of the curve's tangent character.
    pub fn is_compatible(&self) -> bool {
        self.surface.components().iter().all(|comp| {
            let r = comp.num_divisors();
            (0..r).all(|i| {
                let here = comp.first_chart + i;
                let next = comp.first_chart + (i + 1) % r;
                let curve = self.surface.charts()[here].tangent_characters[0];
                (self.chart_weights[here] - self.chart_weights[next]).is_parallel_to(curve)
            })
        })
    }

    pub fn is_nef(&self) -> bool {
        self.surface.components().iter().zip(&self.coefficients).all(|(comp, a)| {
            (0..comp.num_divisors())
                .all(|i| (0..comp.num_divisors()).map(|j| a[j] * comp.divisor_intersection(i, j)).sum::<i64>() >= 0)
        })
    }

    /// Stable textual identity used for provenance digests.
    pub fn describe(&self) -> String {
        let groups: Vec<String> = self
            .coefficients
            .iter()
            .map(|a| a.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("{}|{}", self.surface.name(), groups.join("+"))
    }
}

pub fn intersection_numbers(bundle: &EquivariantLineBundle) -> ClassData {
    let mut out = ClassData { beta_sq: 0, beta_c1: 0 };
    for (comp, a) in bundle.surface.components().iter().zip(&bundle.coefficients) {
        let r = comp.num_divisors();
        for i in 0..r {
            for j in 0..r {
                out.beta_sq += a[i] * a[j] * comp.divisor_intersection(i, j);
                out.beta_c1 += a[i] * comp.divisor_intersection(i, j);
            }
        }
    }
    out
}

/// Lattice points of the divisor polytope, summed over components. Equals
/// `h^0(L)` on every component (for a torus-invariant divisor the polytope
/// count is `h^0` whether or not it is nef).
pub fn h0_dimension(bundle: &EquivariantLineBundle) -> u64 {
    bundle
        .surface
        .components()
        .iter()
        .zip(&bundle.coefficients)
        .map(|(comp, a)| comp.polytope_points(a))
        .sum()
}

/// `H^2(L) = H^0(K - L)^* = 0` on every component, with `K = -sum D_i`.
pub fn h2_vanishes(bundle: &EquivariantLineBundle) -> bool {
    bundle
        .surface
        .components()
        .iter()
        .zip(&bundle.coefficients)
        .all(|(comp, a)| {
            let dual: Vec<i64> = a.iter().map(|x| -1 - x).collect();
            comp.polytope_points(&dual) == 0
        })
}

/// `chi(L) = chi(O_S) + (beta^2 + beta.c1)/2`.
pub fn euler_characteristic(bundle: &EquivariantLineBundle) -> i64 {
    let d = intersection_numbers(bundle);
    bundle.surface.chi_o() + (d.beta_sq + d.beta_c1) / 2
}
