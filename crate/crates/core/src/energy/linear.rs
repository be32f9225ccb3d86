use std::fmt;

use num_traits::{Signed, Zero};

use super::atom::Atom;
use crate::number::{ExtEnergy, Rational, TimeDur};

/// The energy function of one path: a composition of atoms kept in normal form.
///
/// Normal form means rates strictly increase, bounds never decrease, and every
/// price except the last is zero. The empty sequence is the identity function.
/// Ordering is lexicographic on the atom tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinearRtef {
    atoms: Vec<Atom>,
}

impl LinearRtef {
    pub fn identity() -> Self {
        LinearRtef { atoms: Vec::new() }
    }

    pub fn atom(atom: Atom) -> Self {
        LinearRtef::normalize(vec![atom])
    }

    /// Wraps a sequence that is already in normal form, or returns it back if it is not.
    pub fn from_normal(mut atoms: Vec<Atom>) -> Result<Self, Vec<Atom>> {
        if is_normal(&atoms) {
            if atoms.first().is_some_and(Atom::is_unit) {
                atoms.remove(0);
            }
            Ok(LinearRtef { atoms })
        } else {
            Err(atoms)
        }
    }

    /// Brings an arbitrary atom sequence (a path) into normal form.
    ///
    /// First every atom whose rate does not exceed its predecessor's is merged
    /// into that predecessor, leftmost first. A single left-to-right sweep then
    /// pushes all prices onto the last atom, raising bounds to compensate and
    /// to keep them non-decreasing.
    /// A leading `(0, 0, 0)` atom is the identity and is dropped.
    pub fn normalize(seq: Vec<Atom>) -> Self {
        let mut merged: Vec<Atom> = Vec::with_capacity(seq.len());
        for next in seq {
            match merged.last_mut() {
                Some(prev) if prev.rate() >= next.rate() => {
                    let bound = prev.bound().clone().max(next.bound() - prev.price());
                    let price = prev.price() + next.price();
                    *prev = Atom::raw(prev.rate().clone(), price, bound);
                }
                _ => merged.push(next),
            }
        }
        for k in 1..merged.len() {
            let (head, tail) = merged.split_at_mut(k);
            let prev = &mut head[k - 1];
            let next = &mut tail[0];
            let bound = prev.bound().clone().max(next.bound() - prev.price());
            let price = prev.price() + next.price();
            *next = Atom::raw(next.rate().clone(), price, bound);
            *prev = Atom::raw(prev.rate().clone(), Rational::zero(), prev.bound().clone());
        }
        if merged.first().is_some_and(Atom::is_unit) {
            merged.remove(0);
        }
        debug_assert!(is_normal(&merged));
        LinearRtef { atoms: merged }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The highest rate along the path; `0` for the identity, which behaves like `(0, 0, 0)`.
    pub fn last_rate(&self) -> Rational {
        self.atoms
            .last()
            .map(|a| a.rate().clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total price of the path (only the last atom carries one).
    pub fn total_price(&self) -> Rational {
        self.atoms
            .last()
            .map(|a| a.price().clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Whether some state on the path has a positive rate.
    pub fn has_positive_rate(&self) -> bool {
        self.last_rate().is_positive()
    }

    /// `self ≼ other`: the last rate of `self` does not exceed that of `other`.
    pub fn precedes(&self, other: &LinearRtef) -> bool {
        self.last_rate() <= other.last_rate()
    }

    /// Concatenation of the two paths, normalized.
    pub fn then(&self, next: &LinearRtef) -> LinearRtef {
        let mut seq = self.atoms.clone();
        seq.extend(next.atoms.iter().cloned());
        LinearRtef::normalize(seq)
    }

    /// Best output energy from initial energy `x` within time `t`.
    ///
    /// For finite time the optimum waits only as long as needed in each state
    /// and spends the remaining time in the last (fastest) state. Infinite time
    /// is the supremum over finite budgets.
    pub fn eval(&self, x: &ExtEnergy, t: &TimeDur) -> ExtEnergy {
        let x = match x {
            ExtEnergy::Bottom => return ExtEnergy::Bottom,
            ExtEnergy::Infinity => return ExtEnergy::Infinity,
            ExtEnergy::Finite(x) => x,
        };
        let Some(last) = self.atoms.last() else {
            return ExtEnergy::Finite(x.clone());
        };
        match t {
            TimeDur::Finite(t) => {
                let mut cur = x.clone();
                let mut rem = t.clone();
                for atom in &self.atoms {
                    if &cur < atom.bound() {
                        if atom.rate().is_zero() {
                            return ExtEnergy::Bottom;
                        }
                        let wait = (atom.bound() - &cur) / atom.rate();
                        if wait > rem {
                            return ExtEnergy::Bottom;
                        }
                        cur = atom.bound().clone();
                        rem -= wait;
                    }
                }
                ExtEnergy::Finite(cur + last.rate() * rem + last.price())
            }
            TimeDur::Infinity => {
                let first = &self.atoms[0];
                if first.rate().is_zero() && x < first.bound() {
                    ExtEnergy::Bottom
                } else if last.rate().is_positive() {
                    ExtEnergy::Infinity
                } else {
                    ExtEnergy::Finite(x + last.price())
                }
            }
        }
    }

    /// Smallest initial energy from which the path is feasible with unbounded time.
    pub(crate) fn infinite_time_threshold(&self) -> Rational {
        match self.atoms.first() {
            Some(first) if first.rate().is_zero() => first.bound().clone(),
            _ => Rational::zero(),
        }
    }
}

fn is_normal(atoms: &[Atom]) -> bool {
    let rates_increase = atoms.windows(2).all(|w| w[0].rate() < w[1].rate());
    let bounds_ordered = atoms.windows(2).all(|w| w[0].bound() <= w[1].bound());
    let prices_deferred = atoms.iter().rev().skip(1).all(|a| a.price().is_zero());
    rates_increase && bounds_ordered && prices_deferred
}

impl fmt::Display for LinearRtef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("1");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{q, qi};

    fn lin(atoms: &[(i64, i64, i64)]) -> LinearRtef {
        LinearRtef::normalize(atoms.iter().map(|&(r, p, b)| Atom::int(r, p, b)).collect())
    }

    fn fin(v: Rational) -> ExtEnergy {
        ExtEnergy::Finite(v)
    }

    #[test]
    fn satellite_top_path_normal_form() {
        let l = lin(&[(0, -20, 20), (2, -20, 20), (5, -10, 10)]);
        assert_eq!(
            l.atoms(),
            &[
                Atom::int(0, 0, 20),
                Atom::int(2, 0, 40),
                Atom::int(5, -50, 50)
            ]
        );
    }

    #[test]
    fn merge_rule_on_equal_rates() {
        assert_eq!(
            lin(&[(2, -5, 5), (2, -5, 5)]).atoms(),
            &[Atom::int(2, -10, 10)]
        );
        assert_eq!(lin(&[(3, -1, 1)]).atoms(), &[Atom::int(3, -1, 1)]);
    }

    #[test]
    fn unit_atom_is_identity() {
        assert!(lin(&[(0, 0, 0)]).is_identity());
        assert_eq!(lin(&[(0, 0, 0), (3, -1, 1)]), lin(&[(3, -1, 1)]));
        assert_eq!(LinearRtef::identity().last_rate(), qi(0));
    }

    #[test]
    fn eval_matches_closed_form_cases() {
        let l = lin(&[(0, 0, 20), (2, 0, 40), (5, -50, 50)]);
        assert_eq!(
            l.eval(&ExtEnergy::int(30), &TimeDur::int(7)),
            ExtEnergy::int(0)
        );
        assert_eq!(
            l.eval(&ExtEnergy::int(10), &TimeDur::int(100)),
            ExtEnergy::Bottom
        );
        assert_eq!(
            l.eval(&ExtEnergy::int(60), &TimeDur::int(0)),
            ExtEnergy::int(10)
        );
        // 2.5·30 + 5·(15/2) − 110
        assert_eq!(
            l.eval(&ExtEnergy::int(30), &TimeDur::finite(q(15, 2))),
            fin(q(5, 2))
        );
    }

    #[test]
    fn eval_identity_and_extremes() {
        let id = LinearRtef::identity();
        assert_eq!(
            id.eval(&ExtEnergy::int(4), &TimeDur::int(9)),
            ExtEnergy::int(4)
        );
        assert_eq!(
            id.eval(&ExtEnergy::int(4), &TimeDur::Infinity),
            ExtEnergy::int(4)
        );
        let l = lin(&[(0, 0, 20), (2, 0, 40), (5, -50, 50)]);
        assert_eq!(
            l.eval(&ExtEnergy::Bottom, &TimeDur::int(3)),
            ExtEnergy::Bottom
        );
        assert_eq!(
            l.eval(&ExtEnergy::Infinity, &TimeDur::int(0)),
            ExtEnergy::Infinity
        );
    }

    #[test]
    fn infinite_time_is_the_limit() {
        let l = lin(&[(0, 0, 20), (2, 0, 40), (5, -50, 50)]);
        assert_eq!(
            l.eval(&ExtEnergy::int(19), &TimeDur::Infinity),
            ExtEnergy::Bottom
        );
        assert_eq!(
            l.eval(&ExtEnergy::int(20), &TimeDur::Infinity),
            ExtEnergy::Infinity
        );
        let drain = lin(&[(0, -1, 1)]);
        assert_eq!(
            drain.eval(&ExtEnergy::int(0), &TimeDur::Infinity),
            ExtEnergy::Bottom
        );
        assert_eq!(
            drain.eval(&ExtEnergy::int(100), &TimeDur::Infinity),
            ExtEnergy::int(99)
        );
        let pump = lin(&[(1, -1, 5)]);
        assert_eq!(
            pump.eval(&ExtEnergy::int(0), &TimeDur::Infinity),
            ExtEnergy::Infinity
        );
    }

    #[test]
    fn precedes_compares_last_rates() {
        let f1 = lin(&[(0, 0, 30), (4, -10, 30)]);
        let f2 = lin(&[(0, 0, 20), (1, 0, 40), (5, -50, 50)]);
        assert!(f1.precedes(&f2));
        assert!(!f2.precedes(&f1));
        assert!(f1.precedes(&f1));
    }

    #[test]
    fn from_normal_checks_invariants() {
        assert!(LinearRtef::from_normal(vec![Atom::int(0, 0, 20), Atom::int(2, 0, 40)]).is_ok());
        assert!(LinearRtef::from_normal(vec![Atom::int(2, 0, 20), Atom::int(2, 0, 40)]).is_err());
        assert!(LinearRtef::from_normal(vec![Atom::int(1, 0, 40), Atom::int(2, 0, 20)]).is_err());
        assert!(LinearRtef::from_normal(vec![Atom::int(1, -1, 40), Atom::int(2, 0, 40)]).is_err());
    }
}
