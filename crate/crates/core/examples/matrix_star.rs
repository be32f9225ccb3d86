//! Star of a transition matrix, with both block splits.

use rtea::matrix::Split;
use rtea::{Atom, Rtef, RtefMatrix};

fn main() {
    let e = |r, p, b| Rtef::from_atom(Atom::int(r, p, b));
    let bot = Rtef::bottom;
    let m = RtefMatrix::from_rows(vec![
        vec![bot(), e(0, 0, 30), e(0, 0, 20)],
        vec![e(4, -10, 30), bot(), bot()],
        vec![e(1, -50, 50), bot(), e(1, 0, 5)],
    ]);
    println!("M =\n{m}");
    let star = m.star();
    println!("M* =\n{star}");
    println!("splits agree: {}", star.equiv(&m.star_with(Split::Half)));
    println!(
        "fixpoint law: {}",
        star.equiv(&RtefMatrix::identity(3).sup(&m.mul(&star)))
    );
}
