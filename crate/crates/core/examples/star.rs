//! The star of a function with two loop components.

use rtea::{Atom, ExtEnergy, LinearRtef, Rtef, TimeDur};

fn main() {
    let f1 = LinearRtef::normalize(vec![Atom::int(0, 0, 30), Atom::int(4, -10, 30)]);
    let f2 = LinearRtef::normalize(vec![
        Atom::int(0, 0, 20),
        Atom::int(1, 0, 40),
        Atom::int(5, -50, 50),
    ]);
    let f = Rtef::from_components([f1, f2]);
    let star = f.star();
    println!("f  = {f}");
    println!("f* = {star}");
    println!("components: {}", star.len());
    println!(
        "f* unfolds: {}",
        star.equiv(&Rtef::one().sup(&f.compose(&star)))
    );
    let (x, t) = (ExtEnergy::int(25), TimeDur::int(12));
    println!("f*({x}, {t}) = {}", star.eval(&x, &t));
}
