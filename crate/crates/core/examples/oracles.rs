//! Compare exact values with the brute-force oracles.

use rtea::number::q;
use rtea::oracles::{buchi_unroll, dp_lower_bound, DpConfig};
use rtea::{ExtEnergy, RteaModel, TimeDur};

fn main() {
    let satellite =
        RteaModel::parse(include_str!("../models/satellite.rtea")).expect("bundled model parses");
    let rep = satellite.to_matrix_rep().rep;
    let horizon = q(10, 1);
    for x in [20, 30, 50] {
        let exact = rep.eval(&ExtEnergy::int(x), &TimeDur::Finite(horizon.clone()));
        print!("x0 = {x}: exact {exact}");
        for d in [1, 2, 4, 8] {
            let dp = dp_lower_bound(
                &satellite,
                &q(x, 1),
                &DpConfig::for_horizon(&horizon, q(1, d)),
            );
            print!(", dp(1/{d}) {dp}");
        }
        println!();
    }

    let lossy =
        RteaModel::parse(include_str!("../models/pump_lossy.rtea")).expect("bundled model parses");
    let buchi = lossy.to_matrix_rep().rep.buchi_behavior();
    for x in [0, 5] {
        let t = TimeDur::Infinity;
        println!(
            "pump_lossy x0 = {x}: exact {}, unrolled {}",
            buchi.eval(&ExtEnergy::int(x), &t),
            buchi_unroll(&lossy, &q(x, 1), &t, 50)
        );
    }
}
