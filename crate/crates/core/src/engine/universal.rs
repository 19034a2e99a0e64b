//! Fitting the universal polynomial `F_{n,k}(beta^2, beta.c1, c1^2, c2)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::{bracket_magnitude, EngineError, FitError};
use crate::algebra::linalg::{rref, solve, RowSpace, Solve};
use crate::algebra::{format_rat, rat, vars, MultiPoly, Rat};
use crate::toric::{intersection_numbers, EquivariantLineBundle, ToricSurfaceModel};

pub const NUMBER_NAMES: [&str; 4] = ["beta_sq", "beta_c1", "c1_sq", "c2"];

/// Exponents on `(beta^2, beta.c1, c1^2, c2)`.
pub type Exponent = [u32; 4];

/// All exponent vectors of total degree `<= bound`, graded then
/// lexicographic.
pub fn monomials(bound: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                for c in (0..=d - a - b).rev() {
                    out.push([a, b, c, d - a - b - c]);
                }
            }
        }
    }
    out
}

pub fn monomial_value(exp: &Exponent, numbers: &[i64; 4]) -> Rat {
    let mut v = Rat::one();
    for (e, x) in exp.iter().zip(numbers) {
        v *= rat(x.pow(*e));
    }
    v
}

/// The four topological numbers of a toric configuration.
pub fn config_numbers(bundle: &EquivariantLineBundle) -> [i64; 4] {
    let d = intersection_numbers(bundle);
    let s = bundle.surface();
    [d.beta_sq, d.beta_c1, s.c1_sq(), s.c2()]
}

pub fn config_digest(bundle: &EquivariantLineBundle) -> String {
    let h = Sha256::digest(bundle.describe().as_bytes());
    hex::encode(&h[..8])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPolynomial {
    pub n: u32,
    pub k: u32,
    pub degree_bound: u32,
    pub coefficients: BTreeMap<Exponent, Rat>,
    pub provenance: Vec<String>,
    pub holdouts_validated: usize,
}

impl UniversalPolynomial {
    pub fn evaluate(&self, numbers: &[i64; 4]) -> Rat {
        self.coefficients
            .iter()
            .map(|(e, c)| c * monomial_value(e, numbers))
            .fold(Rat::zero(), |a, b| a + b)
    }

    pub fn as_poly(&self) -> MultiPoly {
        let r = vars(&NUMBER_NAMES);
        let mut p = MultiPoly::zero(r.clone());
        for (e, c) in &self.coefficients {
            p = &p + &MultiPoly::monomial(r.clone(), e.to_vec(), c.clone());
        }
        p
    }

    pub fn total_degree(&self) -> u32 {
        self.coefficients.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

fn row(numbers: &[i64; 4], monos: &[Exponent]) -> Vec<Rat> {
    monos.iter().map(|e| monomial_value(e, numbers)).collect()
}

fn kernel_description(monos: &[Exponent], kernel: &[Vec<Rat>]) -> Vec<String> {
    let r = vars(&NUMBER_NAMES);
    kernel
        .iter()
        .map(|v| {
            let mut p = MultiPoly::zero(r.clone());
            for (e, c) in monos.iter().zip(v) {
                p = &p + &MultiPoly::monomial(r.clone(), e.to_vec(), c.clone());
            }
            p.to_string()
        })
        .collect()
}

/// Rank check on the topological numbers alone; no localization needed.
pub fn check_rank(degree_bound: u32, training: &[EquivariantLineBundle]) -> Result<(), FitError> {
    let monos = monomials(degree_bound);
    let rows: Vec<Vec<Rat>> = training.iter().map(|b| row(&config_numbers(b), &monos)).collect();
    let ech = rref(rows, monos.len());
    if ech.rank() < monos.len() {
        return Err(FitError::RankDeficient {
            rank: ech.rank(),
            required: monos.len(),
            kernel: kernel_description(&monos, &ech.nullspace()),
        });
    }
    Ok(())
}

/// Exact fit of `F_{n,k}` of degree `<= n+k` through the training
/// magnitudes, then validation on every holdout.
pub fn fit_universal(
    n: u32,
    k: u32,
    training: &[EquivariantLineBundle],
    holdouts: &[EquivariantLineBundle],
    seed: u64,
) -> Result<UniversalPolynomial, EngineError> {
    let degree_bound = n + k;
    let monos = monomials(degree_bound);
    check_rank(degree_bound, training)?;

    let values: Vec<Rat> = training
        .par_iter()
        .map(|b| bracket_magnitude(b, n, k, seed))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Rat>> = training.iter().map(|b| row(&config_numbers(b), &monos)).collect();
    let coeffs = match solve(&rows, &values) {
        Solve::Unique(x) => x,
        Solve::Inconsistent => return Err(FitError::Inconsistent { n, k }.into()),
        Solve::Underdetermined(_) => unreachable!("rank checked above"),
    };
    let poly = UniversalPolynomial {
        n,
        k,
        degree_bound,
        coefficients: monos
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (*e, c))
            .collect(),
        provenance: training.iter().map(config_digest).collect(),
        holdouts_validated: 0,
    };

    let held: Vec<Rat> = holdouts
        .par_iter()
        .map(|b| bracket_magnitude(b, n, k, seed))
        .collect::<Result<_, _>>()?;
    for (b, value) in holdouts.iter().zip(held) {
        let residual = value - poly.evaluate(&config_numbers(b));
        if !residual.is_zero() {
            return Err(FitError::HoldoutResidual { config: b.describe(), residual: format_rat(&residual) }.into());
        }
    }
    Ok(UniversalPolynomial { holdouts_validated: holdouts.len(), ..poly })
}

/// Bundle coefficient patterns tried on each component, padded with zeros.
const PATTERNS: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[2],
    &[1, 1],
    &[0, 0, 1],
    &[3],
    &[2, 1],
    &[1, 2],
    &[0],
    &[1, 0, 1],
    &[-1],
    &[2, 2],
    &[3, 1],
    &[1, 3],
    &[4],
    &[0, 2],
    &[2, 0, 1],
    &[-1, 1],
    &[1, -1],
    &[4, 1],
];

const CONNECTED: &[&str] = &["P2", "F0", "F1", "Bl1P2", "Bl2P2", "Bl3P2", "F2", "Bl1F0", "Bl2F0", "Bl3F0", "F3", "Bl2F1"];

fn catalog_surfaces() -> Vec<Arc<ToricSurfaceModel>> {
    let mut names: Vec<String> = CONNECTED.iter().map(|s| s.to_string()).collect();
    // Unions put up to four different values of chi(O) = (c1^2 + c2)/12 in
    // play, which degree-3 fits need.
    for s in ["P2+P2", "P2+F0", "P2+Bl3P2", "F0+Bl2P2", "Bl1P2+Bl3P2", "P2+Bl3F0", "F1+Bl3F0"] {
        names.push(s.into());
    }
    for s in ["P2+P2+P2", "P2+F0+Bl3P2", "Bl2P2+Bl3P2+Bl3F0", "P2+P2+Bl1P2"] {
        names.push(s.into());
    }
    for s in ["P2+P2+P2+P2", "P2+F0+Bl2P2+Bl3P2", "Bl3P2+Bl3P2+Bl3F0+P2", "F0+F1+Bl3F0+Bl3F0"] {
        names.push(s.into());
    }
    names
        .iter()
        .map(|n| Arc::new(ToricSurfaceModel::parse(n).expect("catalog names parse")))
        .collect()
}

/// Index tuples of length `len` over `0..base`, ordered by their sum.
fn diagonal_tuples(len: usize, base: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let max_sum = len * (base - 1);
    for s in 0..=max_sum {
        let mut cur = Vec::new();
        fn go(len: usize, base: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if cur.len() == len {
                if rem == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for i in 0..base.min(rem + 1) {
                cur.push(i);
                go(len, base, rem - i, cur, out, limit);
                cur.pop();
            }
        }
        go(len, base, s, &mut cur, &mut out, limit);
        if out.len() >= limit {
            break;
        }
    }
    out
}

/// Deterministic sweep of catalog configurations, interleaving surfaces so
/// that every `(c1^2, c2)` appears early.
pub fn candidate_configs() -> Vec<EquivariantLineBundle> {
    const PER_SURFACE: usize = 40;
    let surfaces = catalog_surfaces();
    let per: Vec<Vec<EquivariantLineBundle>> = surfaces
        .iter()
        .map(|s| {
            let comps = s.components().len();
            diagonal_tuples(comps, PATTERNS.len(), PER_SURFACE)
                .into_iter()
                .filter_map(|idx| {
                    let coeffs: Vec<Vec<i64>> = idx.iter().map(|&i| PATTERNS[i].to_vec()).collect();
                    EquivariantLineBundle::new(s.clone(), coeffs).ok()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for round in 0..PER_SURFACE {
        for list in &per {
            if let Some(b) = list.get(round) {
                out.push(b.clone());
            }
        }
    }
    out
}

/// Training configurations reaching full rank for degree `n + k`, plus at
/// least `min_holdouts` holdouts with numbers outside the training set,
/// including a disjoint union and a connected surface.
pub fn training_plan(n: u32, k: u32, min_holdouts: usize) -> Result<(Vec<EquivariantLineBundle>, Vec<EquivariantLineBundle>), FitError> {
    let monos = monomials(n + k);
    let mut space = RowSpace::new();
    let mut training = Vec::new();
    let mut rest = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for b in candidate_configs() {
        let nums = config_numbers(&b);
        if space.rank() < monos.len() && space.try_insert(&row(&nums, &monos)) {
            seen.insert(nums);
            training.push(b);
        } else if space.rank() == monos.len() {
            rest.push(b);
        }
    }
    if training.len() < monos.len() {
        check_rank(n + k, &training)?;
    }
    let mut holdouts: Vec<EquivariantLineBundle> = Vec::new();
    let union = rest.iter().position(|b| b.surface().components().len() > 1 && !seen.contains(&config_numbers(b)));
    let single = rest.iter().position(|b| b.surface().components().len() == 1 && !seen.contains(&config_numbers(b)));
    let order = union.into_iter().chain(single).chain(0..rest.len());
    for i in order {
        if holdouts.len() >= min_holdouts.max(2) {
            break;
        }
        if seen.insert(config_numbers(&rest[i])) {
            holdouts.push(rest[i].clone());
        }
    }
    Ok((training, holdouts))
}
