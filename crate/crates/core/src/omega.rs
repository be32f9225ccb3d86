//! Boolean behaviours of infinite runs and the `ω` operation on energy functions.
//!
//! An [`OmegaVal`] answers "does an infinite run exist from energy `x` within
//! time `t`?". Values produced by this module are determined by two pieces of
//! data. For finite `t` the answer is true exactly where a *support* energy
//! function is defined: such runs are Zeno, so after finitely many steps they
//! must loop forever through zero-price paths with vanishing delays. For
//! `t = ∞` the answer is additionally true above an energy threshold, from
//! which some loop can be repeated without losing energy.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::energy::Rtef;
use crate::number::{fmt_rational, ExtEnergy, Rational, TimeDur};

/// Lower energy threshold for infinite-time acceptance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Threshold {
    Never,
    AtLeast(Rational),
}

impl Threshold {
    pub fn min(self, other: Threshold) -> Threshold {
        match (self, other) {
            (Threshold::Never, t) | (t, Threshold::Never) => t,
            (Threshold::AtLeast(a), Threshold::AtLeast(b)) => Threshold::AtLeast(a.min(b)),
        }
    }

    pub fn admits(&self, x: &Rational) -> bool {
        match self {
            Threshold::Never => false,
            Threshold::AtLeast(c) => x >= c,
        }
    }

    fn from_option(v: Option<Rational>) -> Threshold {
        v.map_or(Threshold::Never, Threshold::AtLeast)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Never => f.write_str("never"),
            Threshold::AtLeast(c) => write!(f, "x ≥ {}", fmt_rational(c)),
        }
    }
}

/// An element of the semimodule of infinite behaviours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaVal {
    fin_support: Rtef,
    inf_threshold: Threshold,
}

impl OmegaVal {
    pub fn new(fin_support: Rtef, inf_threshold: Threshold) -> Self {
        OmegaVal {
            fin_support,
            inf_threshold,
        }
    }

    /// The behaviour that is false everywhere.
    pub fn never() -> Self {
        OmegaVal {
            fin_support: Rtef::bottom(),
            inf_threshold: Threshold::Never,
        }
    }

    pub fn fin_support(&self) -> &Rtef {
        &self.fin_support
    }

    pub fn inf_threshold(&self) -> &Threshold {
        &self.inf_threshold
    }

    pub fn is_never(&self) -> bool {
        self.fin_support.is_bottom() && self.inf_threshold == Threshold::Never
    }

    /// `f^ω`: infinite repetition of `f`.
    ///
    /// Finite time: some prefix `f^n` followed by one zero-price component,
    /// which can then be repeated with zero delay forever. Infinite time: some
    /// component returns at least the energy it started with, which is the
    /// case above its feasibility threshold when it has a positive rate or
    /// zero total price.
    pub fn omega_of(f: &Rtef) -> OmegaVal {
        let zero_price = f.zero_price_part();
        let fin_support = if zero_price.is_bottom() {
            Rtef::bottom()
        } else {
            f.star().compose(&zero_price)
        };
        let inf_threshold = f
            .components()
            .iter()
            .filter(|l| l.has_positive_rate() || l.total_price().is_zero())
            .map(|l| l.infinite_time_threshold())
            .min();
        OmegaVal {
            fin_support,
            inf_threshold: Threshold::from_option(inf_threshold),
        }
    }

    /// The left action `f ⊙ v`: run `f` first, then continue with `v`.
    pub fn act(f: &Rtef, v: &OmegaVal) -> OmegaVal {
        let fin_support = f.compose(&v.fin_support);
        let inf_threshold = match &v.inf_threshold {
            Threshold::Never => None,
            Threshold::AtLeast(c) => f
                .components()
                .iter()
                .map(|l| {
                    if l.has_positive_rate() {
                        // f(x, ∞) = ∞ wherever it is defined.
                        l.infinite_time_threshold()
                    } else {
                        // Identity or a single zero-rate atom: f(x, ∞) = x + price for x ≥ bound.
                        let needed = c - l.total_price();
                        needed.max(l.infinite_time_threshold())
                    }
                })
                .min(),
        };
        OmegaVal {
            fin_support,
            inf_threshold: Threshold::from_option(inf_threshold),
        }
    }

    /// Pointwise disjunction.
    pub fn sup(&self, other: &OmegaVal) -> OmegaVal {
        OmegaVal {
            fin_support: self.fin_support.sup(&other.fin_support),
            inf_threshold: self.inf_threshold.clone().min(other.inf_threshold.clone()),
        }
    }

    pub fn eval(&self, x: &ExtEnergy, t: &TimeDur) -> bool {
        match x {
            ExtEnergy::Bottom => false,
            ExtEnergy::Infinity => {
                !self.fin_support.is_bottom()
                    || (t.is_infinite() && self.inf_threshold != Threshold::Never)
            }
            ExtEnergy::Finite(v) => {
                let by_support = !self.fin_support.eval(x, t).is_bottom();
                by_support || (t.is_infinite() && self.inf_threshold.admits(v))
            }
        }
    }

    /// The least initial energy admitted at `t = ∞`, if any.
    pub fn infinite_time_minimum(&self) -> Option<Rational> {
        let by_threshold = match &self.inf_threshold {
            Threshold::AtLeast(c) => Some(c.clone()),
            Threshold::Never => None,
        };
        // Every support component is feasible at t = ∞ from its first zero-rate bound on.
        let by_support = self
            .fin_support
            .components()
            .iter()
            .map(|l| l.infinite_time_threshold())
            .min();
        match (by_threshold, by_support) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
        .map(|m| if m.is_negative() { Rational::zero() } else { m })
    }
}

impl fmt::Display for OmegaVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "support: {}; t = ∞: {}",
            self.fin_support, self.inf_threshold
        )
    }
}
