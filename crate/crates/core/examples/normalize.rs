//! Bring an atom sequence into normal form and compare values.
//!
//! ```text
//! cargo run --example normalize
//! ```

use rtea::{Atom, ExtEnergy, LinearRtef, TimeDur};

fn main() {
    // Open the panel in two stages, then rotate it.
    let path = vec![
        Atom::int(0, -20, 20),
        Atom::int(2, -20, 20),
        Atom::int(5, -10, 10),
    ];
    let l = LinearRtef::normalize(path);
    println!("normal form: {l}");
    for (x, t) in [(20, 10), (50, 2), (60, 4)] {
        println!(
            "  f({x}, {t}) = {}",
            l.eval(&ExtEnergy::int(x), &TimeDur::int(t))
        );
    }
}
