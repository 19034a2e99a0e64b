//! Reduced residue invariants: the bracket integrand, direct computation
//! on toric configurations, and evaluation through fitted universal
//! polynomials.

mod cache;
mod integrand;
mod universal;

pub use cache::{CacheError, PolynomialCache};
pub use integrand::{build_integrand, BracketIntegrand};
pub use universal::{
    candidate_configs, check_rank, config_digest, config_numbers, fit_universal, monomial_value, monomials,
    training_plan, Exponent, UniversalPolynomial, NUMBER_NAMES,
};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::rational::serde_rat;
use crate::algebra::Rat;
use crate::hilb::{localization_integral, LocalizationError};
use crate::toric::{euler_characteristic, EquivariantLineBundle, ToricError, ToricSurfaceModel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("training set has rank {rank}, need {required}; missing directions: {}", kernel.join("; "))]
    RankDeficient { rank: usize, required: usize, kernel: Vec<String> },
    #[error("training system for F_{{{n},{k}}} is inconsistent")]
    Inconsistent { n: u32, k: u32 },
    #[error("holdout {config} has residual {residual}")]
    HoldoutResidual { config: String, residual: String },
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("invalid topology: {0}")]
    Validation(String),
    #[error("{0}")]
    UnsupportedScope(String),
}

impl EngineError {
    /// Errors that mean the computation contradicted itself rather than
    /// that the input was bad.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            EngineError::Localization(LocalizationError::Disagreement { .. })
                | EngineError::Fit(FitError::HoldoutResidual { .. } | FitError::Inconsistent { .. })
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            EngineError::Toric(_) => "toric",
            EngineError::Localization(LocalizationError::Disagreement { .. }) => "disagreement",
            EngineError::Localization(_) => "localization",
            EngineError::Fit(FitError::RankDeficient { .. }) => "rank_deficient",
            EngineError::Fit(FitError::Inconsistent { .. }) => "inconsistent",
            EngineError::Fit(FitError::HoldoutResidual { .. }) => "holdout_residual",
            EngineError::Cache(_) => "cache",
            EngineError::Validation(_) => "validation",
            EngineError::UnsupportedScope(_) => "unsupported_scope",
        }
    }
}

fn one() -> u32 {
    1
}

fn is_one(c: &u32) -> bool {
    *c == 1
}

/// Topological input of a surface with a curve class.
///
/// `components` counts connected components; it defaults to 1 and only
/// matters for disjoint unions, where `chi(O_S) = components - h01 + h02`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceTopology {
    pub beta_sq: i64,
    pub beta_c1: i64,
    pub c1_sq: i64,
    pub c2: i64,
    pub h01: u32,
    pub h02: u32,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub components: u32,
}

impl SurfaceTopology {
    pub fn new(beta_sq: i64, beta_c1: i64, c1_sq: i64, c2: i64, h01: u32, h02: u32) -> Self {
        SurfaceTopology { beta_sq, beta_c1, c1_sq, c2, h01, h02, components: 1 }
    }

    /// Numbers of a toric configuration; `h01 = h02 = 0` on each piece.
    pub fn of_bundle(bundle: &EquivariantLineBundle) -> Self {
        let [beta_sq, beta_c1, c1_sq, c2] = config_numbers(bundle);
        SurfaceTopology {
            beta_sq,
            beta_c1,
            c1_sq,
            c2,
            h01: 0,
            h02: 0,
            components: bundle.surface().components().len() as u32,
        }
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        let bad = |m: String| Err(EngineError::Validation(m));
        if self.components == 0 {
            return bad("a surface has at least one component".into());
        }
        let noether = self.c1_sq + self.c2;
        if noether.rem_euclid(12) != 0 {
            return bad(format!("c1^2 + c2 = {noether} is not divisible by 12"));
        }
        let expected = self.components as i64 - self.h01 as i64 + self.h02 as i64;
        if noether / 12 != expected {
            return bad(format!(
                "(c1^2 + c2)/12 = {} but {} - h01 + h02 = {expected}",
                noether / 12,
                self.components
            ));
        }
        if (self.beta_sq + self.beta_c1).rem_euclid(2) != 0 {
            return bad(format!("beta^2 + beta.c1 = {} is odd", self.beta_sq + self.beta_c1));
        }
        Ok(())
    }

    pub fn chi_o(&self) -> i64 {
        (self.c1_sq + self.c2) / 12
    }

    pub fn chi_l(&self) -> i64 {
        self.chi_o() + (self.beta_sq + self.beta_c1) / 2
    }

    pub fn numbers(&self) -> [i64; 4] {
        [self.beta_sq, self.beta_c1, self.c1_sq, self.c2]
    }
}

/// `coefficient * t^t_exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    #[serde(with = "serde_rat")]
    pub coefficient: Rat,
    pub t_exponent: i64,
}

impl InvariantValue {
    pub fn zero() -> Self {
        InvariantValue { coefficient: Rat::zero(), t_exponent: 0 }
    }

    fn signed(magnitude: Rat, sign_exp: i64, t_exponent: i64) -> Self {
        if magnitude.is_zero() {
            return InvariantValue::zero();
        }
        let coefficient = if sign_exp.rem_euclid(2) == 1 { -magnitude } else { magnitude };
        InvariantValue { coefficient, t_exponent }
    }
}

/// Unsigned integral `int_{S^[n]}` of the bracket for `(S, L)`.
pub fn bracket_magnitude(bundle: &EquivariantLineBundle, n: u32, k: u32, seed: u64) -> Result<Rat, EngineError> {
    let integrand = build_integrand(n, euler_characteristic(bundle), k);
    Ok(localization_integral(bundle.surface(), bundle, &integrand.class, seed)?)
}

/// The invariant for `(S, L, n, m)` computed by localization on `S^[n]`.
pub fn direct_invariant(
    surface: &ToricSurfaceModel,
    bundle: &EquivariantLineBundle,
    n: u32,
    m: i64,
    seed: u64,
) -> Result<InvariantValue, EngineError> {
    if **bundle.surface() != *surface {
        return Err(LocalizationError::SurfaceMismatch { surface: surface.name(), bundle: bundle.surface().name() }.into());
    }
    let chi = euler_characteristic(bundle);
    let k = chi - 1 - m;
    if k < 0 {
        return Ok(InvariantValue::zero());
    }
    let magnitude = bracket_magnitude(bundle, n, k as u32, seed)?;
    Ok(InvariantValue::signed(magnitude, k + n as i64, m + 1 - surface.chi_o()))
}

/// Evaluates invariants at arbitrary topology, fitting `F_{n,k}` on demand
/// and persisting it when a cache directory is configured.
pub struct InvariantEngine {
    seed: u64,
    cache: Option<PolynomialCache>,
    memo: Mutex<BTreeMap<(u32, u32), Arc<UniversalPolynomial>>>,
}

pub const MIN_HOLDOUTS: usize = 5;

impl InvariantEngine {
    pub fn new(seed: u64, cache: Option<PolynomialCache>) -> Self {
        InvariantEngine { seed, cache, memo: Mutex::new(BTreeMap::new()) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Fits `F_{n,k}` from scratch and stores it if a cache is configured.
    pub fn fit(&self, n: u32, k: u32) -> Result<Arc<UniversalPolynomial>, EngineError> {
        let (training, holdouts) = training_plan(n, k, MIN_HOLDOUTS)?;
        let poly = Arc::new(fit_universal(n, k, &training, &holdouts, self.seed)?);
        if let Some(c) = &self.cache {
            c.store(&poly)?;
        }
        self.memo.lock().expect("memo lock").insert((n, k), poly.clone());
        Ok(poly)
    }

    /// `F_{n,k}` from memory, then the cache, then a fresh fit.
    pub fn universal(&self, n: u32, k: u32) -> Result<Arc<UniversalPolynomial>, EngineError> {
        if let Some(p) = self.memo.lock().expect("memo lock").get(&(n, k)) {
            return Ok(p.clone());
        }
        if let Some(c) = &self.cache {
            if let Some(p) = c.load(n, k)? {
                let p = Arc::new(p);
                self.memo.lock().expect("memo lock").insert((n, k), p.clone());
                return Ok(p);
            }
        }
        self.fit(n, k)
    }

    pub fn evaluate_theorem1(&self, topology: &SurfaceTopology, n: u32, m: i64) -> Result<InvariantValue, EngineError> {
        topology.validate()?;
        let k = topology.chi_l() - 1 - m;
        if k < 0 {
            return Ok(InvariantValue::zero());
        }
        let poly = self.universal(n, k as u32)?;
        let magnitude = poly.evaluate(&topology.numbers());
        Ok(InvariantValue::signed(magnitude, k + n as i64, m + 1 - topology.chi_o()))
    }

    /// The Picard version restricted to `b1 = 0`, where `Pic_beta(S)` is a point.
    pub fn evaluate_theorem2_b1zero(&self, topology: &SurfaceTopology, n: u32, m: i64) -> Result<InvariantValue, EngineError> {
        if topology.h01 > 0 {
            return Err(EngineError::UnsupportedScope(format!(
                "h01 = {} > 0: only wedge invariants are available for b1 > 0 (use the wedge command)",
                topology.h01
            )));
        }
        topology.validate()?;
        let k = topology.chi_l() - 1 - m;
        if k < 0 {
            return Ok(InvariantValue::zero());
        }
        let poly = self.universal(n, k as u32)?;
        let magnitude = poly.evaluate(&topology.numbers());
        let t = m - topology.h02 as i64 + 1 - topology.components as i64;
        Ok(InvariantValue::signed(magnitude, k + n as i64 + topology.h01 as i64, t))
    }
}
