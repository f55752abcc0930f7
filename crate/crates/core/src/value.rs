//! Exact values in `[0, ∞]`: a nonnegative rational or the symbol `∞`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Rational = Rational64;

/// A value in `[0, ∞]` with exact rational arithmetic.
///
/// The derived order puts every finite value below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtValue {
    Finite(Rational),
    Infinite,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(Rational::zero())
    }

    pub fn nat(n: u64) -> Self {
        ExtValue::Finite(Rational::from_integer(n as i64))
    }

    /// `num/den`, reduced. Panics on a zero denominator.
    pub fn ratio(num: u64, den: u64) -> Self {
        ExtValue::Finite(Rational::new(num as i64, den as i64))
    }

    /// Wraps a rational, rejecting negatives.
    pub fn from_rational(r: Rational) -> Option<Self> {
        if r < Rational::zero() {
            None
        } else {
            Some(ExtValue::Finite(r))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtValue::Finite(r) if r.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValue::Infinite)
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            ExtValue::Finite(r) => Some(*r),
            ExtValue::Infinite => None,
        }
    }

    /// True for `∞` and for finite integers.
    pub fn is_integral(&self) -> bool {
        match self {
            ExtValue::Finite(r) => r.is_integer(),
            ExtValue::Infinite => true,
        }
    }

    pub fn scale(self, n: u64) -> ExtValue {
        self * ExtValue::nat(n)
    }

    /// `max(self - r, 0)`; `∞` stays `∞`.
    pub fn saturating_sub(self, r: Rational) -> ExtValue {
        match self {
            ExtValue::Finite(v) if v > r => ExtValue::Finite(v - r),
            ExtValue::Finite(_) => ExtValue::zero(),
            ExtValue::Infinite => ExtValue::Infinite,
        }
    }

    /// `0` stays `0`, everything else becomes `∞`.
    pub fn times_infinity(self) -> ExtValue {
        if self.is_zero() {
            self
        } else {
            ExtValue::Infinite
        }
    }
}

impl Default for ExtValue {
    fn default() -> Self {
        ExtValue::zero()
    }
}

impl Add for ExtValue {
    type Output = ExtValue;

    fn add(self, other: ExtValue) -> ExtValue {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinite,
        }
    }
}

impl Mul for ExtValue {
    type Output = ExtValue;

    /// Multiplication with the convention `0·∞ = 0`.
    fn mul(self, other: ExtValue) -> ExtValue {
        if self.is_zero() || other.is_zero() {
            return ExtValue::zero();
        }
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a * b),
            _ => ExtValue::Infinite,
        }
    }
}

impl Sum for ExtValue {
    fn sum<I: Iterator<Item = ExtValue>>(iter: I) -> ExtValue {
        iter.fold(ExtValue::zero(), |a, b| a + b)
    }
}

impl From<u64> for ExtValue {
    fn from(n: u64) -> Self {
        ExtValue::nat(n)
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Infinite => f.write_str("inf"),
            ExtValue::Finite(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            ExtValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a value in [0, inf]")]
pub struct ParseValueError(pub String);

impl FromStr for ExtValue {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(ExtValue::Infinite);
        }
        let bad = || ParseValueError(s.to_string());
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: u64 = num.parse().map_err(|_| bad())?;
        let d: u64 = den.parse().map_err(|_| bad())?;
        if d == 0 || n > i64::MAX as u64 || d > i64::MAX as u64 {
            return Err(bad());
        }
        Ok(ExtValue::ratio(n, d))
    }
}

impl serde::Serialize for ExtValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ExtValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Formats a rational as `p/q` in lowest terms (or `p` for integers).
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` into a nonnegative rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse::<ExtValue>().ok()?.finite()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs_and_zero_annihilates() {
        let three = ExtValue::nat(3);
        assert_eq!(three + ExtValue::Infinite, ExtValue::Infinite);
        assert_eq!(ExtValue::zero() * ExtValue::Infinite, ExtValue::zero());
        assert_eq!(ExtValue::Infinite * ExtValue::zero(), ExtValue::zero());
        assert_eq!(three * ExtValue::Infinite, ExtValue::Infinite);
    }

    #[test]
    fn order_puts_infinity_on_top() {
        assert!(ExtValue::ratio(64, 1) < ExtValue::Infinite);
        assert!(ExtValue::ratio(1, 3) < ExtValue::ratio(1, 2));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "7", "5/2", "inf", "1/8"] {
            let v: ExtValue = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("10/4".parse::<ExtValue>().unwrap().to_string(), "5/2");
        assert!("-1".parse::<ExtValue>().is_err());
        assert!("1/0".parse::<ExtValue>().is_err());
    }

    #[test]
    fn saturating_sub_clamps_at_zero() {
        assert_eq!(ExtValue::ratio(1, 2).saturating_sub(Rational::one()), ExtValue::zero());
        assert_eq!(
            ExtValue::nat(2).saturating_sub(Rational::new(1, 3)),
            ExtValue::ratio(5, 3)
        );
    }
}
