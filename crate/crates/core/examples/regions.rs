//! Print the closed form of a path function strip by strip.

use rtea::energy::extract_regions;
use rtea::energy::region::PieceShape;
use rtea::number::fmt_rational;
use rtea::{Atom, LinearRtef};

fn main() {
    let l = LinearRtef::normalize(vec![
        Atom::int(0, -20, 20),
        Atom::int(2, -20, 20),
        Atom::int(5, -10, 10),
    ]);
    println!("{l}");
    for piece in extract_regions(&l) {
        let high = piece
            .x_high
            .as_ref()
            .map_or_else(|| "inf".to_string(), fmt_rational);
        match &piece.shape {
            PieceShape::Infeasible => {
                println!("  x in [{}, {high}): no run", fmt_rational(&piece.x_low))
            }
            PieceShape::Active { boundary, value } => println!(
                "  x in [{}, {high}): for t >= {}·x + {}, value {}·t + {}·x + {}",
                fmt_rational(&piece.x_low),
                fmt_rational(&boundary.slope),
                fmt_rational(&boundary.intercept),
                fmt_rational(&value.t_coef),
                fmt_rational(&value.x_coef),
                fmt_rational(&value.constant),
            ),
        }
    }
}
