//! JSON export of energy functions with their region decomposition.
//!
//! All numbers are written as canonical rational strings. Infeasible strips are
//! left out; an unbounded strip has `"x_high": "inf"`. On a piece the function
//! is defined for `t ≥ max(0, W(x))`, with `W` given by its slope and its value
//! at `x_low`, and equals `t·value.t + x·value.x + value.c` there.

use serde_json::{json, Value};

use crate::energy::region::PieceShape;
use crate::energy::{extract_regions, LinearRtef, Rtef};
use crate::number::fmt_rational;

/// One component: its atoms and feasible pieces.
pub fn component_json(l: &LinearRtef) -> Value {
    let atoms: Vec<Value> = l
        .atoms()
        .iter()
        .map(|a| {
            json!([
                fmt_rational(a.rate()),
                fmt_rational(a.price()),
                fmt_rational(a.bound())
            ])
        })
        .collect();
    let pieces: Vec<Value> = extract_regions(l)
        .into_iter()
        .filter_map(|p| match &p.shape {
            PieceShape::Infeasible => None,
            PieceShape::Active { boundary, value } => Some(json!({
                "x_low": fmt_rational(&p.x_low),
                "x_high": p.x_high.as_ref().map_or_else(|| "inf".to_string(), fmt_rational),
                "boundary": {
                    "slope": fmt_rational(&boundary.slope),
                    "t_at_x_low": fmt_rational(&boundary.at(&p.x_low)),
                },
                "value": {
                    "t": fmt_rational(&value.t_coef),
                    "x": fmt_rational(&value.x_coef),
                    "c": fmt_rational(&value.constant),
                },
            })),
        })
        .collect();
    json!({ "atoms": atoms, "pieces": pieces })
}

/// A function as `{"components": [...]}`, components in lexicographic atom order.
pub fn rtef_json(f: &Rtef) -> Value {
    json!({ "components": f.components().iter().map(component_json).collect::<Vec<_>>() })
}
