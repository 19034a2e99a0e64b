//! Exact computation of reduced residue stable-pair invariants of surfaces.
//!
//! The invariants with `H_1`-insertions reduce to a tautological integral
//! over the Hilbert scheme of points `S^[n]`. This crate evaluates that
//! integral by torus localization on toric test surfaces, fits the
//! universal polynomial in `(beta^2, beta.c1, c1^2, c2)` it must be, and
//! evaluates the fitted polynomial at arbitrary topological input. It also
//! computes the exterior-algebra invariants of `H^1(S)` that enter when the
//! Picard variety is positive dimensional, and the arithmetic bounds used
//! to compare surface and threefold invariants.

pub mod algebra;
pub mod arithmetic;
pub mod cli;
pub mod engine;
pub mod exterior;
pub mod hilb;
pub mod toric;
