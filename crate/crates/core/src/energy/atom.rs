use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::AtomError;
use crate::number::{fmt_rational, q, Rational};

/// One delay-then-transition step: wait in a state earning `rate` per time unit,
/// then take a transition that needs `bound` energy and costs `-price`.
///
/// Ordering is lexicographic on `(rate, price, bound)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    rate: Rational,
    price: Rational,
    bound: Rational,
}

impl Atom {
    pub fn new(rate: Rational, price: Rational, bound: Rational) -> Result<Self, AtomError> {
        if rate.is_negative() {
            return Err(AtomError::NegativeRate(rate));
        }
        if price.is_positive() {
            return Err(AtomError::PositivePrice(price));
        }
        if bound < -price.clone() {
            return Err(AtomError::BoundBelowPrice { bound, price });
        }
        Ok(Atom { rate, price, bound })
    }

    /// Integer shorthand for tests and examples. Panics on invalid parameters.
    pub fn int(rate: i64, price: i64, bound: i64) -> Self {
        Atom::new(q(rate, 1), q(price, 1), q(bound, 1)).expect("valid atom")
    }

    /// The atom `(0, 0, 0)`, which denotes the identity function.
    pub fn unit() -> Self {
        Atom {
            rate: Rational::zero(),
            price: Rational::zero(),
            bound: Rational::zero(),
        }
    }

    pub fn rate(&self) -> &Rational {
        &self.rate
    }

    pub fn price(&self) -> &Rational {
        &self.price
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn is_unit(&self) -> bool {
        self.rate.is_zero() && self.price.is_zero() && self.bound.is_zero()
    }

    /// Both constructors below preserve the atom invariants whenever their inputs satisfy them.
    pub(crate) fn raw(rate: Rational, price: Rational, bound: Rational) -> Self {
        debug_assert!(!rate.is_negative() && !price.is_positive() && bound >= -price.clone());
        Atom { rate, price, bound }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            fmt_rational(&self.rate),
            fmt_rational(&self.price),
            fmt_rational(&self.bound)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::qi;

    #[test]
    fn rejects_invalid_parameters() {
        assert!(matches!(
            Atom::new(qi(-1), qi(0), qi(0)),
            Err(AtomError::NegativeRate(_))
        ));
        assert!(matches!(
            Atom::new(qi(1), qi(5), qi(5)),
            Err(AtomError::PositivePrice(_))
        ));
        assert!(matches!(
            Atom::new(qi(1), qi(-10), qi(3)),
            Err(AtomError::BoundBelowPrice { .. })
        ));
        assert!(Atom::new(qi(0), qi(-10), qi(10)).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(
            Atom::new(q(5, 2), qi(-1), qi(1)).unwrap().to_string(),
            "(5/2, -1, 1)"
        );
    }
}
