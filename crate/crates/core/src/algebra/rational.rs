//! Exact rationals and their string form.
//!
//! Every rational leaving the library is written as `"p/q"` with `q > 0` in
//! lowest terms, or as `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::AlgebraError;

/// Arbitrary-precision rational number, always normalized.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"`. Denominators must be positive and the fraction
/// already reduced; anything else is rejected rather than normalized.
pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let bad = || AlgebraError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if !den.is_positive() || !num.gcd(&den).is_one() {
        return Err(bad());
    }
    Ok(Rat::new_raw(num, den))
}

/// Converts an integral rational to `i64`, `None` if it is not an integer
/// or out of range.
pub fn to_i64(q: &Rat) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Generalized binomial coefficient `x (x-1) ... (x-j+1) / j!`, valid for
/// negative `x`.
pub fn binomial(x: i64, j: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..j as i64 {
        acc *= ratio(x - i, i + 1);
    }
    acc
}

/// Serde adapter storing a [`Rat`] as its canonical string.
pub mod serde_rat {
    use super::{format_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}
