//! Export a behaviour with its region pieces as JSON.
//!
//! ```text
//! cargo run --example dump_json -- crates/core/models/two_loops.rtea
//! ```

use rtea::model::rtef_json;
use rtea::RteaModel;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("model file is readable"),
        None => include_str!("../models/two_loops.rtea").to_string(),
    };
    let model = RteaModel::parse(&text).unwrap_or_else(|e| panic!("error[{}]: {e}", e.code()));
    let behavior = model.to_matrix_rep().rep.finite_behavior();
    println!(
        "{}",
        serde_json::to_string_pretty(&rtef_json(&behavior)).expect("JSON values serialize")
    );
}
