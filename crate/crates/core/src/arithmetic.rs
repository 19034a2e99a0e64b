//! Closed-form numerics on surface data: adjunction, Euler
//! characteristics, virtual dimensions and the purity bounds.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rat, ratio, Rat};
use crate::engine::{EngineError, SurfaceTopology};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("beta^2 - beta.c1 = {0} is odd")]
    Parity(i64),
    #[error("L^2 = {0} must be positive")]
    NotPositive(i64),
    #[error("splitting pairings sum to {sum}, expected beta^2 = {beta_sq}")]
    SplittingSum { sum: i64, beta_sq: i64 },
    #[error("part {index} has beta.beta_k = {pairing}, outside [0, beta^2 = {beta_sq}]")]
    NotEffective { index: usize, pairing: i64, beta_sq: i64 },
}

/// `h` with `2h - 2 = beta^2 - c1(S).beta`.
pub fn arithmetic_genus(beta_sq: i64, beta_c1: i64) -> Result<i64, ArithmeticError> {
    let d = beta_sq - beta_c1;
    if d.rem_euclid(2) != 0 {
        return Err(ArithmeticError::Parity(d));
    }
    Ok(d / 2 + 1)
}

pub fn euler_char_l(topology: &SurfaceTopology) -> Result<i64, EngineError> {
    topology.validate()?;
    Ok(topology.chi_l())
}

/// `h - 1 + n + beta.c1 + h02`.
pub fn reduced_virtual_dim(topology: &SurfaceTopology, n: u32) -> Result<i64, EngineError> {
    topology.validate()?;
    let h = arithmetic_genus(topology.beta_sq, topology.beta_c1)
        .map_err(|e| EngineError::Validation(e.to_string()))?;
    Ok(h - 1 + n as i64 + topology.beta_c1 + topology.h02 as i64)
}

/// `chi <= 1 - h + delta`: at most `delta` free points.
pub fn purity_chi_bound(h: i64, delta: i64, chi: i64) -> bool {
    chi <= 1 - h + delta
}

/// Pairings `beta.beta_k` of the graded pieces of a splitting of `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingData {
    pub parts: Vec<i64>,
}

impl SplittingData {
    pub fn new(beta_sq: i64, parts: Vec<i64>) -> Result<Self, ArithmeticError> {
        let s = SplittingData { parts };
        s.validate(beta_sq)?;
        Ok(s)
    }

    pub fn validate(&self, beta_sq: i64) -> Result<(), ArithmeticError> {
        let sum: i64 = self.parts.iter().sum();
        if sum != beta_sq {
            return Err(ArithmeticError::SplittingSum { sum, beta_sq });
        }
        for (index, &pairing) in self.parts.iter().enumerate() {
            if pairing < 0 || pairing > beta_sq {
                return Err(ArithmeticError::NotEffective { index, pairing, beta_sq });
            }
        }
        Ok(())
    }
}

/// `sum_k min(beta.beta_k, beta.(beta - beta_k)) / 2`.
pub fn splitting_lower_bound(beta_sq: i64, splitting: &SplittingData) -> Result<Rat, ArithmeticError> {
    splitting.validate(beta_sq)?;
    Ok(splitting
        .parts
        .iter()
        .map(|&p| ratio(p.min(beta_sq - p), 2))
        .fold(Rat::zero(), |a, b| a + b))
}

/// Largest `a^2` allowed by Hodge index: `(L.a)^2 / L^2`.
pub fn hodge_index_max_square(l_sq: i64, l_dot_a: i64) -> Result<Rat, ArithmeticError> {
    if l_sq <= 0 {
        return Err(ArithmeticError::NotPositive(l_sq));
    }
    Ok(rat(l_dot_a * l_dot_a) / rat(l_sq))
}
