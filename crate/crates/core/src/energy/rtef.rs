use std::fmt;

use super::atom::Atom;
use super::linear::LinearRtef;
use super::order::{leq_components, leq_linear};
use crate::number::{ExtEnergy, TimeDur};

/// A real-time energy function, stored as a finite supremum of path functions.
///
/// Components are kept sorted and free of duplicates, so two values with the
/// same component set compare equal. The empty set is `⊥`; `{1}` is the unit.
/// Different sets may still denote the same function; use [`Rtef::equiv`] for
/// semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rtef {
    components: Vec<LinearRtef>,
}

impl Rtef {
    pub fn bottom() -> Self {
        Rtef {
            components: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Rtef {
            components: vec![LinearRtef::identity()],
        }
    }

    pub fn from_atom(atom: Atom) -> Self {
        Rtef::from_linear(LinearRtef::atom(atom))
    }

    pub fn from_linear(l: LinearRtef) -> Self {
        Rtef {
            components: vec![l],
        }
    }

    /// Collects components without pruning dominated ones.
    pub fn from_components(components: impl IntoIterator<Item = LinearRtef>) -> Self {
        let mut components: Vec<LinearRtef> = components.into_iter().collect();
        components.sort();
        components.dedup();
        Rtef { components }
    }

    pub fn components(&self) -> &[LinearRtef] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_bottom(&self) -> bool {
        self.components.is_empty()
    }

    pub fn eval(&self, x: &ExtEnergy, t: &TimeDur) -> ExtEnergy {
        self.components
            .iter()
            .map(|l| l.eval(x, t))
            .max()
            .unwrap_or(ExtEnergy::Bottom)
    }

    /// Sequential composition `self ⊙ next`: the best split of the time budget
    /// between running `self` and then `next`.
    pub fn compose(&self, next: &Rtef) -> Rtef {
        let mut out = Vec::with_capacity(self.len() * next.len());
        for a in &self.components {
            for b in &next.components {
                out.push(a.then(b));
            }
        }
        Rtef::from_components(out).prune()
    }

    /// Pointwise supremum.
    pub fn sup(&self, other: &Rtef) -> Rtef {
        Rtef::from_components(self.components.iter().chain(&other.components).cloned()).prune()
    }

    /// Removes every component that is pointwise below another retained component.
    pub fn prune(self) -> Rtef {
        let n = self.components.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            let c = &self.components[i];
            if (0..n).any(|j| j != i && keep[j] && leq_linear(c, &self.components[j])) {
                keep[i] = false;
            }
        }
        let components = self
            .components
            .into_iter()
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect();
        Rtef { components }
    }

    /// Pointwise order, decided exactly.
    pub fn leq(&self, other: &Rtef) -> bool {
        leq_components(&self.components, &other.components)
    }

    /// Semantic equality: `leq` in both directions.
    pub fn equiv(&self, other: &Rtef) -> bool {
        self.leq(other) && other.leq(self)
    }

    /// Kleene star.
    ///
    /// With the non-identity components sorted by last rate, any composition
    /// of components is dominated by one that uses each component at most once
    /// and in sorted order. The star is therefore the supremum of those
    /// ordered compositions, built incrementally here with pruning in between.
    pub fn star(&self) -> Rtef {
        let mut sorted: Vec<&LinearRtef> = self
            .components
            .iter()
            .filter(|l| !l.is_identity())
            .collect();
        sorted.sort_by_key(|l| l.last_rate());
        let mut acc = Rtef::one();
        for c in sorted {
            let extended = acc.components.iter().map(|a| a.then(c));
            acc = Rtef::from_components(acc.components.iter().cloned().chain(extended)).prune();
        }
        acc
    }

    /// `self^n` with `self^0 = 1`.
    pub fn power(&self, n: usize) -> Rtef {
        (0..n).fold(Rtef::one(), |acc, _| acc.compose(self))
    }

    /// `1 ∨ self ∨ … ∨ self^n`.
    pub fn sup_powers(&self, n: usize) -> Rtef {
        let mut acc = Rtef::one();
        let mut p = Rtef::one();
        for _ in 0..n {
            p = p.compose(self);
            acc = acc.sup(&p);
        }
        acc
    }

    /// Components of total price zero.
    pub fn zero_price_part(&self) -> Rtef {
        Rtef {
            components: self
                .components
                .iter()
                .filter(|l| num_traits::Zero::is_zero(&l.total_price()))
                .cloned()
                .collect(),
        }
    }
}

impl From<LinearRtef> for Rtef {
    fn from(l: LinearRtef) -> Self {
        Rtef::from_linear(l)
    }
}

impl fmt::Display for Rtef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("⊥");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{q, Rational};

    fn lin(atoms: &[(i64, i64, i64)]) -> LinearRtef {
        LinearRtef::normalize(atoms.iter().map(|&(r, p, b)| Atom::int(r, p, b)).collect())
    }

    fn f1() -> LinearRtef {
        lin(&[(0, 0, 30), (4, -10, 30)])
    }

    fn f2() -> LinearRtef {
        lin(&[(0, 0, 20), (1, 0, 40), (5, -50, 50)])
    }

    fn at(x: i64, t: i64) -> (ExtEnergy, TimeDur) {
        (ExtEnergy::int(x), TimeDur::int(t))
    }

    #[test]
    fn compose_of_star_example() {
        let c = Rtef::from(f1()).compose(&Rtef::from(f2()));
        assert_eq!(
            c.components(),
            &[lin(&[(0, 0, 30), (4, 0, 50), (5, -60, 60)])]
        );
        let (x, t) = at(55, 3);
        assert_eq!(c.eval(&x, &t), ExtEnergy::int(5 * 3 + 55 - 60));
    }

    #[test]
    fn units_and_zero() {
        let f = Rtef::from(f1());
        assert_eq!(Rtef::one().compose(&f), f);
        assert_eq!(f.compose(&Rtef::one()), f);
        assert!(Rtef::bottom().compose(&f).is_bottom());
        assert!(f.compose(&Rtef::bottom()).is_bottom());
        assert_eq!(f.sup(&Rtef::bottom()), f);
        assert_eq!(f.sup(&f), f);
    }

    #[test]
    fn sup_takes_the_better_component() {
        let s = Rtef::from(f1()).sup(&Rtef::from(f2()));
        assert_eq!(s.len(), 2);
        let (x, t) = at(35, 10);
        assert_eq!(f1().eval(&x, &t), ExtEnergy::int(65));
        assert_eq!(f2().eval(&x, &t), ExtEnergy::int(15));
        assert_eq!(s.eval(&x, &t), ExtEnergy::int(65));
    }

    #[test]
    fn prune_drops_dominated() {
        let f21 = f2().then(&f1());
        let s = Rtef::from_components([f21, f2()]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.prune().components(), &[f2()]);
        let ids = Rtef::from_components([LinearRtef::identity(), LinearRtef::identity()]);
        assert_eq!(ids, Rtef::one());
    }

    #[test]
    fn star_of_example() {
        let f = Rtef::from_components([f1(), f2()]);
        let star = f.star();
        let expected =
            Rtef::from_components([LinearRtef::identity(), f1(), f2(), f1().then(&f2())]);
        assert!(star.equiv(&expected), "star = {star}");
        assert_eq!(star.len(), 4);
    }

    #[test]
    fn star_edge_cases() {
        assert_eq!(Rtef::bottom().star(), Rtef::one());
        assert_eq!(Rtef::one().star(), Rtef::one());
        let pump = Rtef::from(lin(&[(1, 0, 5)]));
        assert!(pump.star().equiv(&Rtef::one().sup(&pump)));
    }

    #[test]
    fn star_is_a_finite_power_sum() {
        let f = Rtef::from_components([
            lin(&[(1, -2, 3)]),
            lin(&[(0, 0, 1), (2, -1, 1)]),
            lin(&[(3, -4, 4)]),
        ]);
        let star = f.star();
        assert!(star.equiv(&f.sup_powers(3)));
        assert!(f.sup_powers(3).equiv(&f.sup_powers(4)));
    }

    #[test]
    fn eval_at_fractional_point() {
        let f = Rtef::from(lin(&[(0, 0, 20), (2, 0, 40), (5, -50, 50)]));
        let v = f.eval(
            &ExtEnergy::Finite(Rational::from_integer(30.into())),
            &TimeDur::Finite(q(15, 2)),
        );
        assert_eq!(v, ExtEnergy::Finite(q(5, 2)));
    }
}
