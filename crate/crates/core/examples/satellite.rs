//! Reachability and coverability questions on the satellite model.

use rtea::{ExtEnergy, RteaModel, TimeDur};

fn main() {
    let model: RteaModel = include_str!("../models/satellite.rtea")
        .parse()
        .expect("bundled model parses");
    let rep = model.to_matrix_rep().rep;
    println!("|A| = {}", rep.finite_behavior());
    for (x, t) in [(50, 0), (50, 2), (20, 10), (19, 1_000_000)] {
        let value = rep.eval(&ExtEnergy::int(x), &TimeDur::int(t));
        println!(
            "x0 = {x:>3}, t = {t:>7}: reach {:5}, best energy {value}",
            !value.is_bottom()
        );
    }
    println!(
        "never reachable with an infinite budget below 20: {}",
        rep.eval(&ExtEnergy::int(19), &TimeDur::Infinity)
            .is_bottom()
    );
}
