use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::AlgebraError;
use crate::algebra::Rat;

/// A weighted grading on the variables of a ring together with a
/// truncation order: a term survives iff its weighted degree is `< order`.
///
/// A single graded variable `x` truncated at `x^N` is the grading with
/// weight 1 on `x`, 0 elsewhere, and order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub weights: Vec<u32>,
    pub order: u32,
}

impl Grading {
    pub fn new(weights: Vec<u32>, order: u32) -> Self {
        Grading { weights, order }
    }

    fn admits(&self, exp: &[u32]) -> bool {
        MultiPoly::weighted_degree(exp, &self.weights) < self.order
    }
}

/// A polynomial read modulo every grading's truncation ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    base: MultiPoly,
    gradings: Arc<[Grading]>,
}

impl TruncatedSeries {
    pub fn new(base: MultiPoly, gradings: impl Into<Arc<[Grading]>>) -> Self {
        let gradings = gradings.into();
        for g in gradings.iter() {
            assert_eq!(g.weights.len(), base.vars().len(), "grading arity mismatch");
        }
        let mut out = MultiPoly::zero(base.vars().clone());
        for (e, c) in base.terms() {
            if gradings.iter().all(|g| g.admits(e)) {
                out.add_term(e.to_vec(), c.clone());
            }
        }
        TruncatedSeries { base: out, gradings }
    }

    /// Same truncation, different polynomial.
    pub fn with_base(&self, base: MultiPoly) -> Self {
        TruncatedSeries::new(base, self.gradings.clone())
    }

    pub fn base(&self) -> &MultiPoly {
        &self.base
    }

    pub fn into_base(self) -> MultiPoly {
        self.base
    }

    pub fn gradings(&self) -> &[Grading] {
        &self.gradings
    }

    fn admits(&self, exp: &[u32]) -> bool {
        self.gradings.iter().all(|g| g.admits(exp))
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.gradings, other.gradings, "series with different truncations");
        let base = self.base.mul_filtered(&other.base, |e| self.admits(e));
        TruncatedSeries { base, gradings: self.gradings.clone() }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.gradings, other.gradings, "series with different truncations");
        TruncatedSeries { base: &self.base + &other.base, gradings: self.gradings.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Multiplicative inverse up to truncation.
    ///
    /// Requires a nonzero constant term, and every non-constant term must
    /// have positive weight in some grading so that the geometric series
    /// terminates.
    pub fn invert(&self) -> Result<TruncatedSeries, AlgebraError> {
        let c0 = self.base.constant_term();
        if c0.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        for (e, _) in self.base.terms() {
            let constant = e.iter().all(|&k| k == 0);
            let graded = self
                .gradings
                .iter()
                .any(|g| MultiPoly::weighted_degree(e, &g.weights) > 0);
            if !constant && !graded {
                return Err(AlgebraError::UngradedTerm);
            }
        }
        let inv_c0 = Rat::one() / &c0;
        // self = c0 (1 - r)  =>  self^{-1} = c0^{-1} (1 + r + r^2 + ...)
        let one = MultiPoly::one(self.base.vars().clone());
        let r = self.with_base(&one - &self.base.scale(&inv_c0));
        let mut acc = self.with_base(one.clone());
        let mut power = self.with_base(one);
        // Each factor of r raises some weighted degree, so the loop ends
        // after at most sum(order) steps.
        let bound: u32 = self.gradings.iter().map(|g| g.order).sum::<u32>() + 1;
        for _ in 0..bound {
            power = power.mul(&r);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.with_base(acc.base.scale(&inv_c0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::vars;
    use crate::algebra::rational::{rat, ratio};
    use proptest::prelude::*;

    fn x_series(coeffs: &[Rat], order: u32) -> TruncatedSeries {
        let v = vars(&["x"]);
        let mut p = MultiPoly::zero(v);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as u32], c.clone());
        }
        TruncatedSeries::new(p, vec![Grading::new(vec![1], order)])
    }

    #[test]
    fn inverts_one_plus_x() {
        let s = x_series(&[rat(1), rat(1)], 3);
        let inv = s.invert().unwrap();
        assert_eq!(inv, x_series(&[rat(1), rat(-1), rat(1)], 3));
    }

    #[test]
    fn inverse_of_one_is_one() {
        let s = x_series(&[rat(1)], 5);
        assert_eq!(s.invert().unwrap(), s);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let s = x_series(&[rat(0), rat(1), rat(1)], 3);
        assert!(matches!(s.invert(), Err(AlgebraError::NotInvertible)));
    }

    #[test]
    fn ungraded_variable_is_rejected() {
        let v = vars(&["x", "y"]);
        let p = &MultiPoly::one(v.clone()) + &MultiPoly::var(v, "y").unwrap();
        let s = TruncatedSeries::new(p, vec![Grading::new(vec![1, 0], 4)]);
        assert!(matches!(s.invert(), Err(AlgebraError::UngradedTerm)));
    }

    #[test]
    fn truncation_drops_high_terms() {
        let s = x_series(&[rat(1), rat(2), rat(3), rat(4)], 2);
        assert_eq!(s, x_series(&[rat(1), rat(2)], 2));
    }

    proptest! {
        #[test]
        fn invert_then_multiply_is_one(
            c0 in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
            rest in prop::collection::vec((0u32..3, 0u32..3, -4i64..4, 1i64..3), 0..6),
            ox in 1u32..4, oy in 1u32..4,
        ) {
            let v = vars(&["x", "y"]);
            let mut p = MultiPoly::constant(v.clone(), rat(c0));
            for (a, b, n, d) in rest {
                if a + b > 0 {
                    p.add_term(vec![a, b], ratio(n, d));
                }
            }
            let g = vec![Grading::new(vec![1, 0], ox), Grading::new(vec![0, 1], oy)];
            let s = TruncatedSeries::new(p, g);
            let inv = s.invert().unwrap();
            let prod = s.mul(&inv);
            prop_assert_eq!(prod.base(), &MultiPoly::one(v));
        }
    }
}
