//! Exact arithmetic: rationals, multivariate polynomials, truncated graded
//! series and dense linear algebra. Nothing in here rounds.

pub mod linalg;
pub mod poly;
pub mod rational;
pub mod series;

pub use poly::{vars, MultiPoly, Vars};
pub use rational::{format_rat, parse_rat, rat, ratio, Rat};
pub use series::{Grading, TruncatedSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("series has a non-constant term of weight zero in every grading")]
    UngradedTerm,
    #[error("malformed rational `{0}` (expected p/q in lowest terms with q > 0)")]
    BadRational(String),
}
