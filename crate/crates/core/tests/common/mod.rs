//! Shared generators for the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rtea::model::{State, Transition};
use rtea::number::{q, qi};
use rtea::{Atom, ExtEnergy, LinearRtef, Rational, RteaModel, Rtef, RtefMatrix, TimeDur};

pub fn half(k: i64) -> Rational {
    q(k, 2)
}

/// An atom with small half-integer rate, price and bound.
pub fn atom() -> impl Strategy<Value = Atom> {
    (0i64..=10, 0i64..=20, 0i64..=20).prop_map(|(r, p, extra)| {
        let price = -half(p);
        let bound = half(p + extra);
        Atom::new(half(r), price, bound).expect("generated atom is valid")
    })
}

pub fn atom_seq(max_len: usize) -> impl Strategy<Value = Vec<Atom>> {
    prop::collection::vec(atom(), 1..=max_len)
}

pub fn linear(max_len: usize) -> impl Strategy<Value = LinearRtef> {
    atom_seq(max_len).prop_map(LinearRtef::normalize)
}

/// A function with up to `max_components` components of up to `max_len` atoms.
pub fn rtef(max_components: usize, max_len: usize) -> impl Strategy<Value = Rtef> {
    prop::collection::vec(linear(max_len), 0..=max_components)
        .prop_map(|ls| Rtef::from_components(ls).prune())
}

pub fn nonzero_rtef(max_components: usize, max_len: usize) -> impl Strategy<Value = Rtef> {
    prop::collection::vec(linear(max_len), 1..=max_components)
        .prop_map(|ls| Rtef::from_components(ls).prune())
}

/// A finite energy in `[0, 60]` on a grid of `1/4`.
pub fn energy() -> impl Strategy<Value = Rational> {
    (0i64..=240).prop_map(|k| q(k, 4))
}

/// A finite time in `[0, 20]` on a grid of `1/4`.
pub fn finite_time() -> impl Strategy<Value = Rational> {
    (0i64..=80).prop_map(|k| q(k, 4))
}

/// A time budget, infinite one time in eight.
pub fn time() -> impl Strategy<Value = TimeDur> {
    prop_oneof![7 => finite_time().prop_map(TimeDur::Finite), 1 => Just(TimeDur::Infinity)]
}

pub fn point() -> impl Strategy<Value = (ExtEnergy, TimeDur)> {
    (energy(), time()).prop_map(|(x, t)| (ExtEnergy::Finite(x), t))
}

/// Points of a coarse grid over `[0, 60] × ([0, 20] ∪ {∞})`.
pub fn grid_points() -> Vec<(ExtEnergy, TimeDur)> {
    let mut out = Vec::new();
    for x in (0..=120).step_by(7) {
        for t in (0..=40).step_by(3) {
            out.push((ExtEnergy::Finite(q(x, 2)), TimeDur::Finite(q(t, 2))));
        }
        out.push((ExtEnergy::Finite(q(x, 2)), TimeDur::Infinity));
    }
    out
}

/// An `n × n` matrix whose entries have at most `max_atoms` single-atom components.
pub fn matrix(n: usize, max_atoms: usize) -> impl Strategy<Value = RtefMatrix> {
    prop::collection::vec(prop::collection::vec(atom(), 0..=max_atoms), n * n).prop_map(
        move |cells| {
            let rows = cells
                .chunks(n)
                .map(|row| {
                    row.iter()
                        .map(|atoms| {
                            atoms.iter().fold(Rtef::bottom(), |acc, a| {
                                acc.sup(&Rtef::from_atom(a.clone()))
                            })
                        })
                        .collect()
                })
                .collect();
            RtefMatrix::from_rows(rows)
        },
    )
}

/// A random model on states `s0, s1, s2` with `s0` initial and `s2` accepting.
pub fn random_model<R: Rng>(rng: &mut R) -> RteaModel {
    const RATES: [i64; 5] = [0, 1, 2, 3, 5];
    let names = ["s0", "s1", "s2"];
    let states = names
        .iter()
        .enumerate()
        .map(|(i, n)| State {
            name: n.to_string(),
            rate: qi(RATES[rng.gen_range(0..RATES.len())]),
            initial: i == 0,
            accepting: i == 2 || (i == 0 && rng.gen_bool(0.2)),
        })
        .collect();
    let mut transitions = Vec::new();
    for src in names {
        for dst in names {
            if rng.gen_bool(0.45) {
                let price = rng.gen_range(0..=20);
                let bound = price + rng.gen_range(0..=15);
                transitions.push(Transition {
                    src: src.into(),
                    dst: dst.into(),
                    price: qi(-price),
                    bound: qi(bound),
                });
            }
        }
    }
    RteaModel::new(states, transitions).expect("generated model is valid")
}

pub fn satellite() -> RteaModel {
    RteaModel::parse(include_str!("../../models/satellite.rtea")).unwrap()
}

pub fn model_file(name: &str) -> RteaModel {
    let path = format!("{}/models/{name}.rtea", env!("CARGO_MANIFEST_DIR"));
    RteaModel::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}
