use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rat, Rat};
use super::AlgebraError;

/// Ordered variable names shared between polynomials of the same ring.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// Multivariate polynomial over `Rat`, keyed by dense exponent vectors.
///
/// Zero coefficients are never stored. Arithmetic between polynomials over
/// different variable lists panics; callers share one [`Vars`] per ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Rat) -> Self {
        let n = vars.len();
        let mut p = MultiPoly::zero(vars);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(vars: Vars) -> Self {
        MultiPoly::constant(vars, Rat::one())
    }

    pub fn var(vars: Vars, name: &str) -> Result<Self, AlgebraError> {
        let i = index_of(&vars, name)?;
        let mut exp = vec![0; vars.len()];
        exp[i] = 1;
        Ok(MultiPoly::monomial(vars, exp, Rat::one()))
    }

    pub fn monomial(vars: Vars, exp: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent arity mismatch");
        let mut p = MultiPoly::zero(vars);
        p.add_term(exp, coeff);
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        index_of(&self.vars, name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub(crate) fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Product keeping only the exponent vectors accepted by `keep`.
    pub(crate) fn mul_filtered(&self, other: &MultiPoly, keep: impl Fn(&[u32]) -> bool) -> MultiPoly {
        self.check_ring(other);
        let mut out = MultiPoly::zero(self.vars.clone());
        let mut exp = vec![0u32; self.vars.len()];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                for (i, slot) in exp.iter_mut().enumerate() {
                    *slot = e1[i] + e2[i];
                }
                if keep(&exp) {
                    out.add_term(exp.clone(), c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.vars.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of `variable^degree`, as a polynomial in the remaining
    /// variables (the extracted variable is dropped from the ring).
    pub fn coefficient_of(&self, variable: &str, degree: u32) -> Result<MultiPoly, AlgebraError> {
        let i = self.var_index(variable)?;
        let rest: Vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, s)| s.clone())
            .collect();
        let mut out = MultiPoly::zero(rest);
        for (e, c) in &self.terms {
            if e[i] == degree {
                let mut reduced = e.clone();
                reduced.remove(i);
                out.add_term(reduced, c.clone());
            }
        }
        Ok(out)
    }

    /// Substitutes values by name. Every variable occurring in the support
    /// must be assigned; extra names are ignored.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat, AlgebraError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.iter().enumerate() {
            match assignment.get(name) {
                Some(v) => values.push(v.clone()),
                None if self.terms.keys().all(|e| e[i] == 0) => values.push(Rat::zero()),
                None => return Err(AlgebraError::MissingAssignment(name.clone())),
            }
        }
        Ok(self.evaluate_ordered(&values))
    }

    /// Substitutes `values[i]` for the `i`-th variable.
    pub fn evaluate_ordered(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.vars.len());
        let mut powers: Vec<Vec<Rat>> = values.iter().map(|v| vec![Rat::one(), v.clone()]).collect();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let row = &mut powers[i];
                while row.len() <= k as usize {
                    let next = row.last().unwrap() * &values[i];
                    row.push(next);
                }
                term *= &row[k as usize];
            }
            acc += term;
        }
        acc
    }

    pub fn weighted_degree(exp: &[u32], weights: &[u32]) -> u32 {
        exp.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    /// Terms of weighted degree exactly `degree`.
    pub fn homogeneous_part(&self, weights: &[u32], degree: u32) -> MultiPoly {
        assert_eq!(weights.len(), self.vars.len());
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::weighted_degree(e, weights) == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest total degree of a term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

fn index_of(vars: &Vars, name: &str) -> Result<usize, AlgebraError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: &MultiPoly) -> MultiPoly {
        self.check_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self.check_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: &MultiPoly) -> MultiPoly {
        self.mul_filtered(other, |_| true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, other: MultiPoly) -> MultiPoly {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first reads more naturally.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(&p, _)| p > 0)
                .map(|(&p, v)| if p == 1 { v.clone() } else { format!("{v}^{p}") })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, "{}", format_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rat(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};
    use proptest::prelude::*;

    fn ring() -> Vars {
        vars(&["x", "y", "h"])
    }

    #[test]
    fn coefficient_of_binomial_power() {
        let v = vars(&["h"]);
        let one_plus_h = &MultiPoly::one(v.clone()) + &MultiPoly::var(v, "h").unwrap();
        let c = one_plus_h.pow(3).coefficient_of("h", 2).unwrap();
        assert_eq!(c.constant_term(), rat(3));
        assert_eq!(c.num_terms(), 1);
    }

    #[test]
    fn coefficient_of_product_of_linear_factors() {
        let v = vars(&["a", "b", "h"]);
        let a = MultiPoly::var(v.clone(), "a").unwrap();
        let b = MultiPoly::var(v.clone(), "b").unwrap();
        let h = MultiPoly::var(v.clone(), "h").unwrap();
        let p = (&a + &h) * (&b + &h);
        let c = p.coefficient_of("h", 1).unwrap();
        let rv = vars(&["a", "b"]);
        let expect = MultiPoly::var(rv.clone(), "a").unwrap() + MultiPoly::var(rv, "b").unwrap();
        assert_eq!(c, expect);
        assert!(p.coefficient_of("h", 7).unwrap().is_zero());
        assert!(matches!(p.coefficient_of("z", 1), Err(AlgebraError::UnknownVariable(_))));
    }

    #[test]
    fn evaluate_examples() {
        let v = vars(&["x", "y"]);
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &x.pow(2) + &y;
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), rat(2));
        a.insert("y".to_string(), rat(3));
        assert_eq!(p.evaluate(&a).unwrap(), rat(7));

        let c = MultiPoly::constant(v.clone(), ratio(5, 3));
        assert_eq!(c.evaluate(&BTreeMap::new()).unwrap(), ratio(5, 3));
        assert!(matches!(
            x.evaluate(&BTreeMap::new()),
            Err(AlgebraError::MissingAssignment(_))
        ));
    }

    #[test]
    fn display_is_readable() {
        let v = vars(&["x", "y"]);
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &(&x.pow(2) - &y.scale(&ratio(1, 2))) + &MultiPoly::constant(v, rat(-3));
        assert_eq!(p.to_string(), "x^2 - 1/2*y - 3");
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..6, 1i64..4), 0..6).prop_map(|ts| {
            let mut p = MultiPoly::zero(ring());
            for ((a, b, c), n, d) in ts {
                p.add_term(vec![a, b, c], ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(p in arb_poly(), q in arb_poly(), x in -5i64..5, y in -5i64..5, h in -5i64..5) {
            let vals = [rat(x), rat(y), rat(h)];
            let pq = &p * &q;
            prop_assert_eq!(pq.evaluate_ordered(&vals), p.evaluate_ordered(&vals) * q.evaluate_ordered(&vals));
        }
    }
}
