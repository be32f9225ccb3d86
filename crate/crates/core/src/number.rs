//! Exact numbers: rationals, the energy lattice `[0, ∞]_⊥` and time durations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::NumberError;

/// Arbitrary-precision rational, always kept in reduced form with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `n/d` from machine integers. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses a decimal (`2.5`, `-20`, `.5`) or fraction (`5/2`, `-1/3`) literal.
pub fn parse_rational(text: &str) -> Result<Rational, NumberError> {
    let s = text.trim();
    let bad = || NumberError::Malformed(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if s.contains('/') {
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(NumberError::ZeroDenominator(text.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Canonical text of a rational: `p` for integers, `p/q` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// An element of the energy lattice `L = {⊥} ∪ [0, ∞) ∪ {∞}`.
///
/// The derived order is the lattice order: `Bottom < Finite(a) < Finite(b) < Infinity` for `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtEnergy {
    Bottom,
    Finite(Rational),
    Infinity,
}

impl ExtEnergy {
    /// A finite energy value. Panics on negative input.
    pub fn finite(value: Rational) -> Self {
        assert!(!value.is_negative(), "energy values are non-negative");
        ExtEnergy::Finite(value)
    }

    pub fn int(n: i64) -> Self {
        ExtEnergy::finite(qi(n))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, ExtEnergy::Bottom)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtEnergy::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Text form used in reports: `bot`, `inf` or a canonical rational.
    pub fn to_text(&self) -> String {
        match self {
            ExtEnergy::Bottom => "bot".to_string(),
            ExtEnergy::Finite(v) => fmt_rational(v),
            ExtEnergy::Infinity => "inf".to_string(),
        }
    }

    /// `self ≥ y` for a finite threshold `y`.
    pub fn covers(&self, y: &Rational) -> bool {
        match self {
            ExtEnergy::Bottom => false,
            ExtEnergy::Finite(v) => v >= y,
            ExtEnergy::Infinity => true,
        }
    }
}

impl fmt::Display for ExtEnergy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for ExtEnergy {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "bot" | "⊥" => Ok(ExtEnergy::Bottom),
            "inf" | "∞" | "infinity" => Ok(ExtEnergy::Infinity),
            other => {
                let v = parse_rational(other)?;
                if v.is_negative() {
                    return Err(NumberError::Negative(s.to_string()));
                }
                Ok(ExtEnergy::Finite(v))
            }
        }
    }
}

/// A time budget in `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TimeDur {
    Finite(Rational),
    Infinity,
}

impl TimeDur {
    pub fn finite(value: Rational) -> Self {
        assert!(!value.is_negative(), "durations are non-negative");
        TimeDur::Finite(value)
    }

    pub fn int(n: i64) -> Self {
        TimeDur::finite(qi(n))
    }

    pub fn zero() -> Self {
        TimeDur::Finite(Rational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, TimeDur::Infinity)
    }

    pub fn to_text(&self) -> String {
        match self {
            TimeDur::Finite(v) => fmt_rational(v),
            TimeDur::Infinity => "inf".to_string(),
        }
    }
}

impl PartialOrd for TimeDur {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TimeDur {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TimeDur::Finite(a), TimeDur::Finite(b)) => a.cmp(b),
            (TimeDur::Finite(_), TimeDur::Infinity) => Ordering::Less,
            (TimeDur::Infinity, TimeDur::Finite(_)) => Ordering::Greater,
            (TimeDur::Infinity, TimeDur::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for TimeDur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for TimeDur {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(TimeDur::Infinity),
            other => {
                let v = parse_rational(other)?;
                if v.is_negative() {
                    return Err(NumberError::Negative(s.to_string()));
                }
                Ok(TimeDur::Finite(v))
            }
        }
    }
}
