mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rtea::number::q;
use rtea::oracles::{dp_lower_bound, DpConfig};
use rtea::{ExtEnergy, RteaModel, TimeDur};

const MODELS: usize = 30;

fn models(seed: u64) -> Vec<RteaModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..MODELS)
        .map(|_| common::random_model(&mut rng))
        .collect()
}

#[test]
fn text_round_trip() {
    for m in models(1) {
        assert_eq!(RteaModel::parse(&m.to_dsl()).unwrap(), m);
    }
}

#[test]
fn declaration_order_is_irrelevant() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in models(3) {
        let mut states = m.states().to_vec();
        let mut transitions = m.transitions().to_vec();
        states.shuffle(&mut rng);
        transitions.shuffle(&mut rng);
        let shuffled = RteaModel::new(states, transitions).unwrap();
        let (a, b) = (m.to_matrix_rep().rep, shuffled.to_matrix_rep().rep);
        assert!(a.finite_behavior().equiv(&b.finite_behavior()));
        for (x, t) in common::grid_points().into_iter().step_by(5) {
            assert_eq!(
                a.buchi_behavior().eval(&x, &t),
                b.buchi_behavior().eval(&x, &t)
            );
        }
    }
}

#[test]
fn dp_refines_towards_the_exact_value() {
    let horizon = q(4, 1);
    for m in models(4) {
        let rep = m.to_matrix_rep().rep;
        for x in [0, 10, 25, 50] {
            let exact = rep.eval(&ExtEnergy::int(x), &TimeDur::Finite(horizon.clone()));
            let mut previous = ExtEnergy::Bottom;
            for d in [1, 2, 4] {
                let dp = dp_lower_bound(&m, &q(x, 1), &DpConfig::for_horizon(&horizon, q(1, d)));
                assert!(
                    previous <= dp && dp <= exact,
                    "delta 1/{d} at x = {x}: {dp} vs {exact}\n{}",
                    m.to_dsl()
                );
                previous = dp;
            }
        }
    }
}

#[test]
fn bundled_models_parse() {
    for name in ["satellite", "pump", "pump_lossy", "drain", "two_loops"] {
        let m = common::model_file(name);
        assert_eq!(m.to_matrix_rep().rep.dim(), m.states().len(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parser_never_panics(text in "[a-z0-9 {};>/#'-]{0,80}") {
        let _ = RteaModel::parse(&text);
    }

    #[test]
    fn wrapped_fragments_never_panic(body in "(state|trans|rate|price|bound|initial|accepting|->|;|[a-c]|-?[0-9]/?[0-9]?| ){0,24}") {
        if let Err(e) = RteaModel::parse(&format!("rtea {{ {body} }}")) {
            prop_assert!(e.code().starts_with("E-"));
        }
    }
}
