//! Büchi acceptance: does some run visit an accepting state infinitely often?

use rtea::{ExtEnergy, RteaModel, TimeDur};

fn main() {
    for (name, text) in [
        ("pump", include_str!("../models/pump.rtea")),
        ("pump_lossy", include_str!("../models/pump_lossy.rtea")),
        ("drain", include_str!("../models/drain.rtea")),
    ] {
        let model = RteaModel::parse(text).expect("bundled model parses");
        let buchi = model.to_matrix_rep().rep.buchi_behavior();
        println!("{name}: {buchi}");
        for (x, t) in [
            (0, TimeDur::Infinity),
            (3, TimeDur::int(1)),
            (3, TimeDur::int(2)),
            (10, TimeDur::Infinity),
        ] {
            println!(
                "  x0 = {x:>2}, t = {t:>3}: {}",
                buchi.eval(&ExtEnergy::int(x), &t)
            );
        }
    }
}
