//! Real-time energy automata: the data model, its text format, and conversion
//! to the matrix representation.
//!
//! ```text
//! # comments run to the end of the line
//! rtea {
//!   state idle rate 0 initial;
//!   state charge rate 2;
//!   state done rate 0 accepting;
//!   trans idle -> charge price 0 bound 0;
//!   trans charge -> done price -5/2 bound 10;
//! }
//! ```

mod export;
mod parser;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{Signed, Zero};

pub use export::{component_json, rtef_json};

use crate::energy::{Atom, Rtef};
use crate::error::ModelError;
use crate::matrix::{AutomatonRep, RtefMatrix};
use crate::number::{fmt_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    pub name: String,
    pub rate: Rational,
    pub initial: bool,
    pub accepting: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub src: String,
    pub dst: String,
    pub price: Rational,
    pub bound: Rational,
}

/// A validated automaton: exactly one initial state, declared endpoints,
/// non-negative rates, and transitions with `price ≤ 0` and `bound ≥ −price`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RteaModel {
    states: Vec<State>,
    transitions: Vec<Transition>,
}

/// The matrix form of a model together with the state order it uses.
#[derive(Clone, Debug)]
pub struct MatrixForm {
    pub rep: AutomatonRep,
    /// State names by matrix index; accepting states come first.
    pub order: Vec<String>,
}

impl RteaModel {
    pub fn new(states: Vec<State>, transitions: Vec<Transition>) -> Result<Self, ModelError> {
        let mut seen: HashMap<&str, ()> = HashMap::new();
        let mut initial: Option<&str> = None;
        for s in &states {
            if seen.insert(&s.name, ()).is_some() {
                return Err(ModelError::DuplicateState(s.name.clone()));
            }
            if s.rate.is_negative() {
                return Err(ModelError::NegativeRate {
                    state: s.name.clone(),
                    rate: s.rate.clone(),
                });
            }
            if s.initial {
                if let Some(first) = initial {
                    return Err(ModelError::MultipleInitial(
                        first.to_string(),
                        s.name.clone(),
                    ));
                }
                initial = Some(&s.name);
            }
        }
        if initial.is_none() {
            return Err(ModelError::MissingInitial);
        }
        for t in &transitions {
            for end in [&t.src, &t.dst] {
                if !seen.contains_key(end.as_str()) {
                    return Err(ModelError::UndeclaredState(end.clone()));
                }
            }
            if t.price.is_positive() {
                return Err(ModelError::PositivePrice {
                    src: t.src.clone(),
                    dst: t.dst.clone(),
                    price: t.price.clone(),
                });
            }
            if t.bound < -&t.price {
                return Err(ModelError::BoundBelowPrice {
                    src: t.src.clone(),
                    dst: t.dst.clone(),
                    bound: t.bound.clone(),
                    price: t.price.clone(),
                });
            }
        }
        Ok(RteaModel {
            states,
            transitions,
        })
    }

    /// Parses the text format.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let (states, transitions) = parser::parse(text)?;
        RteaModel::new(states, transitions)
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn state(&self, name: &str) -> Option<&State> {
        self.states.iter().find(|s| s.name == name)
    }

    pub fn initial(&self) -> &State {
        self.states
            .iter()
            .find(|s| s.initial)
            .expect("validated model has an initial state")
    }

    pub fn accepting(&self) -> impl Iterator<Item = &State> {
        self.states.iter().filter(|s| s.accepting)
    }

    pub fn max_rate(&self) -> Rational {
        self.states
            .iter()
            .map(|s| s.rate.clone())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// The atom of a transition: delay in the source state, then pay the price.
    pub fn atom_of(&self, t: &Transition) -> Atom {
        let rate = self.state(&t.src).expect("validated endpoint").rate.clone();
        Atom::new(rate, t.price.clone(), t.bound.clone()).expect("validated transition")
    }

    /// Serializes back to the text format.
    pub fn to_dsl(&self) -> String {
        let mut out = String::from("rtea {\n");
        for s in &self.states {
            let _ = write!(out, "  state {} rate {}", s.name, fmt_rational(&s.rate));
            if s.initial {
                out.push_str(" initial");
            }
            if s.accepting {
                out.push_str(" accepting");
            }
            out.push_str(";\n");
        }
        for t in &self.transitions {
            let _ = writeln!(
                out,
                "  trans {} -> {} price {} bound {};",
                t.src,
                t.dst,
                fmt_rational(&t.price),
                fmt_rational(&t.bound)
            );
        }
        out.push_str("}\n");
        out
    }

    /// The representation `(α, M, k)` with accepting states first.
    pub fn to_matrix_rep(&self) -> MatrixForm {
        let order: Vec<String> = self
            .states
            .iter()
            .filter(|s| s.accepting)
            .chain(self.states.iter().filter(|s| !s.accepting))
            .map(|s| s.name.clone())
            .collect();
        let index: HashMap<&str, usize> = order
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let n = order.len();
        let mut m = RtefMatrix::bottom(n, n);
        for t in &self.transitions {
            let (i, j) = (index[t.src.as_str()], index[t.dst.as_str()]);
            let entry = m.get(i, j).sup(&Rtef::from_atom(self.atom_of(t)));
            m.set(i, j, entry);
        }
        let alpha = order
            .iter()
            .map(|name| self.state(name).is_some_and(|s| s.initial))
            .collect();
        let k = self.states.iter().filter(|s| s.accepting).count();
        MatrixForm {
            rep: AutomatonRep::new(alpha, m, k),
            order,
        }
    }
}

impl FromStr for RteaModel {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RteaModel::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::LinearRtef;
    use crate::number::{q, qi};

    const SATELLITE: &str = include_str!("../../models/satellite.rtea");

    #[test]
    fn satellite_parses() {
        let m = RteaModel::parse(SATELLITE).unwrap();
        assert_eq!(m.states().len(), 6);
        assert_eq!(m.transitions().len(), 7);
        assert_eq!(m.initial().name, "closed");
        assert_eq!(m.max_rate(), qi(5));
    }

    #[test]
    fn satellite_matrix() {
        let m = RteaModel::parse(SATELLITE).unwrap();
        let form = m.to_matrix_rep();
        assert_eq!(form.rep.dim(), 6);
        assert_eq!(form.rep.accepting_count(), 1);
        assert_eq!(form.order[0], "operational");
        let i = form.order.iter().position(|s| s == "closed").unwrap();
        let j = form.order.iter().position(|s| s == "half").unwrap();
        assert_eq!(
            form.rep.matrix().get(i, j),
            &Rtef::from_atom(Atom::int(0, -20, 20))
        );
        assert!(form.rep.alpha()[i]);
    }

    #[test]
    fn round_trip() {
        let m = RteaModel::parse(SATELLITE).unwrap();
        assert_eq!(RteaModel::parse(&m.to_dsl()).unwrap(), m);
    }

    #[test]
    fn parallel_transitions_join() {
        let m = RteaModel::parse(
            "rtea { state a rate 1 initial; state b rate 0 accepting;
                    trans a -> b price -1 bound 3; trans a -> b price -2 bound 5/2; }",
        )
        .unwrap();
        let form = m.to_matrix_rep();
        let e = form.rep.matrix().get(1, 0);
        assert_eq!(e.len(), 2);
        assert!(e.components().contains(&LinearRtef::atom(
            Atom::new(qi(1), qi(-2), q(5, 2)).unwrap()
        )));
    }

    #[test]
    fn no_transitions() {
        let m =
            RteaModel::parse("rtea { state a rate 1 initial accepting; state b rate 2; }").unwrap();
        assert_eq!(m.to_matrix_rep().rep.matrix(), &RtefMatrix::bottom(2, 2));
    }

    #[test]
    fn semantic_errors() {
        let code = |text: &str| RteaModel::parse(text).unwrap_err().code();
        assert_eq!(
            code("rtea { state a rate 1 initial; trans a -> a price 5 bound 0; }"),
            "E-POS-PRICE"
        );
        assert_eq!(
            code("rtea { state a rate 1 initial; trans a -> a price -10 bound 3; }"),
            "E-BOUND"
        );
        assert_eq!(
            code("rtea { state a rate 1 initial; state a rate 2; }"),
            "E-DUP-STATE"
        );
        assert_eq!(code("rtea { state a rate 1; }"), "E-NO-INITIAL");
        assert_eq!(
            code("rtea { state a rate 1 initial; state b rate 1 initial; }"),
            "E-MULTI-INITIAL"
        );
        assert_eq!(code("rtea { state a rate -1 initial; }"), "E-NEG-RATE");
        assert_eq!(
            code("rtea { state a rate 1 initial; trans a -> b price 0 bound 0; }"),
            "E-UNDECLARED"
        );
    }
}
