//! The queries behind the `rtea` command line tool, producing JSON reports.
//!
//! Check reports have the shape
//! `{"answer": bool, "value": "p/q" | "inf" | "bot" | null, "query": {...}}`
//! and map to exit code 0 for a positive answer and 1 for a negative one.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::energy::{Atom, LinearRtef};
use crate::model::{component_json, rtef_json, RteaModel};
use crate::number::{fmt_rational, parse_rational, ExtEnergy, Rational, TimeDur};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Some accepting state is reachable: `|A|(x0, t) > ⊥`.
    Reach,
    /// Some accepting state is reachable with energy at least the target: `|A|(x0, t) ≥ y`.
    Cover,
    /// Some run visits accepting states infinitely often: `‖A‖(x0, t)`.
    Buchi,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Reach => "reach",
            CheckKind::Cover => "cover",
            CheckKind::Buchi => "buchi",
        }
    }
}

/// Which functions `dump` writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum What {
    /// The behaviour `|A|`.
    #[default]
    Behavior,
    /// Every non-`⊥` entry of `M*`.
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("`cover` needs --target")]
    MissingTarget,
    #[error("initial energy must be finite or `inf`, not `bot`")]
    BottomEnergy,
    #[error("malformed atom list `{0}`: expected `(rate, price, bound), …`")]
    Atoms(String),
    #[error("invalid atom: {0}")]
    Atom(#[from] crate::error::AtomError),
}

/// A finished query: the JSON report and the process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn answer(answer: bool, json: Value) -> Outcome {
        Outcome {
            json,
            exit_code: if answer { 0 } else { 1 },
        }
    }

    fn done(json: Value) -> Outcome {
        Outcome { json, exit_code: 0 }
    }
}

/// Number of grid steps the discretised reachability check uses over the horizon.
#[cfg(feature = "oracles")]
const VERIFY_STEPS: usize = 64;
#[cfg(feature = "oracles")]
const VERIFY_REPETITIONS: usize = 50;

fn echo(
    command: &str,
    model: Option<&str>,
    x0: Option<&ExtEnergy>,
    time: Option<&TimeDur>,
) -> Map<String, Value> {
    let mut q = Map::new();
    q.insert("command".into(), json!(command));
    if let Some(m) = model {
        q.insert("model".into(), json!(m));
    }
    if let Some(x) = x0 {
        q.insert("x0".into(), json!(x.to_text()));
    }
    if let Some(t) = time {
        q.insert("time".into(), json!(t.to_text()));
    }
    q
}

/// Decides a reachability, coverability or Büchi question.
pub fn run_check(
    model: &RteaModel,
    model_name: &str,
    kind: CheckKind,
    x0: &ExtEnergy,
    time: &TimeDur,
    target: Option<&Rational>,
    verify: bool,
) -> Result<Outcome, QueryError> {
    if x0.is_bottom() {
        return Err(QueryError::BottomEnergy);
    }
    let mut query = echo("check", Some(model_name), Some(x0), Some(time));
    query.insert("kind".into(), json!(kind.name()));
    let rep = model.to_matrix_rep().rep;
    let mut report = Map::new();
    let answer = match kind {
        CheckKind::Reach | CheckKind::Cover => {
            let value = rep.eval(x0, time);
            let answer = match kind {
                CheckKind::Cover => {
                    let y = target.ok_or(QueryError::MissingTarget)?;
                    query.insert("target".into(), json!(fmt_rational(y)));
                    value.covers(y)
                }
                _ => !value.is_bottom(),
            };
            report.insert("value".into(), json!(value.to_text()));
            if verify {
                report.insert("verify".into(), verify_finite(model, x0, time, &value));
            }
            answer
        }
        CheckKind::Buchi => {
            let answer = rep.buchi_behavior().eval(x0, time);
            report.insert("value".into(), Value::Null);
            if !time.is_infinite() {
                report.insert("note".into(), json!("finite time: only Zeno runs qualify"));
            }
            if verify {
                report.insert("verify".into(), verify_buchi(model, x0, time, answer));
            }
            answer
        }
    };
    report.insert("answer".into(), json!(answer));
    report.insert("query".into(), Value::Object(query));
    Ok(Outcome::answer(answer, Value::Object(report)))
}

#[cfg(feature = "oracles")]
fn verify_finite(model: &RteaModel, x0: &ExtEnergy, time: &TimeDur, exact: &ExtEnergy) -> Value {
    use crate::oracles::{dp_lower_bound, DpConfig};
    let (ExtEnergy::Finite(x), TimeDur::Finite(t)) = (x0, time) else {
        return json!({"oracle": "dp", "skipped": "needs finite energy and time"});
    };
    let cfg = if num_traits::Zero::is_zero(t) {
        DpConfig {
            delta: Rational::from_integer(1.into()),
            max_steps: 0,
        }
    } else {
        DpConfig {
            delta: t / Rational::from_integer(VERIFY_STEPS.into()),
            max_steps: VERIFY_STEPS,
        }
    };
    let lower = dp_lower_bound(model, x, &cfg);
    json!({
        "oracle": "dp",
        "delta": fmt_rational(&cfg.delta),
        "value": lower.to_text(),
        "consistent": &lower <= exact,
    })
}

#[cfg(not(feature = "oracles"))]
fn verify_finite(_: &RteaModel, _: &ExtEnergy, _: &TimeDur, _: &ExtEnergy) -> Value {
    json!({"skipped": "built without oracles"})
}

#[cfg(feature = "oracles")]
fn verify_buchi(model: &RteaModel, x0: &ExtEnergy, time: &TimeDur, exact: bool) -> Value {
    use crate::oracles::buchi_unroll;
    let ExtEnergy::Finite(x) = x0 else {
        return json!({"oracle": "unroll", "skipped": "needs finite energy"});
    };
    let found = buchi_unroll(model, x, time, VERIFY_REPETITIONS);
    json!({
        "oracle": "unroll",
        "value": found,
        "consistent": !found || exact,
    })
}

#[cfg(not(feature = "oracles"))]
fn verify_buchi(_: &RteaModel, _: &ExtEnergy, _: &TimeDur, _: bool) -> Value {
    json!({"skipped": "built without oracles"})
}

/// Evaluates `|A|(x0, t)`.
pub fn run_eval(model: &RteaModel, model_name: &str, x0: &ExtEnergy, time: &TimeDur) -> Outcome {
    let value = model.to_matrix_rep().rep.eval(x0, time);
    let query = echo("eval", Some(model_name), Some(x0), Some(time));
    Outcome::done(json!({ "value": value.to_text(), "query": query }))
}

/// Exports `|A|` or the entries of `M*` with their regions.
pub fn run_dump(model: &RteaModel, model_name: &str, what: What) -> Outcome {
    let form = model.to_matrix_rep();
    let mut query = echo("dump", Some(model_name), None, None);
    match what {
        What::Behavior => {
            query.insert("what".into(), json!("behavior"));
            let f = form.rep.finite_behavior();
            Outcome::done(json!({ "behavior": rtef_json(&f), "query": query }))
        }
        What::Star => {
            query.insert("what".into(), json!("star"));
            let star = form.rep.matrix().star();
            let mut entries = Vec::new();
            for (i, from) in form.order.iter().enumerate() {
                for (j, to) in form.order.iter().enumerate() {
                    let e = star.get(i, j);
                    if !e.is_bottom() {
                        entries.push(json!({ "from": from, "to": to, "function": rtef_json(e) }));
                    }
                }
            }
            Outcome::done(json!({ "states": form.order, "entries": entries, "query": query }))
        }
    }
}

/// Parses `(r, p, b), (r, p, b), …`; parentheses are optional around single atoms.
pub fn parse_atoms(text: &str) -> Result<Vec<Atom>, QueryError> {
    let bad = || QueryError::Atoms(text.to_string());
    let cleaned = text.trim();
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    let mut atoms = Vec::new();
    for group in cleaned.split(')') {
        let group = group.trim().trim_start_matches(',').trim();
        if group.is_empty() {
            continue;
        }
        let inner = group.strip_prefix('(').unwrap_or(group);
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [r, p, b] = parts.as_slice() else {
            return Err(bad());
        };
        let num = |s: &str| parse_rational(s).map_err(|_| bad());
        atoms.push(Atom::new(num(r)?, num(p)?, num(b)?)?);
    }
    Ok(atoms)
}

/// Brings an atom sequence into normal form and reports it with its regions.
pub fn run_normalize(atoms_text: &str) -> Result<Outcome, QueryError> {
    let atoms = parse_atoms(atoms_text)?;
    let l = LinearRtef::normalize(atoms);
    let mut query = echo("normalize", None, None, None);
    query.insert("atoms".into(), json!(atoms_text));
    Ok(Outcome::done(
        json!({ "normal_form": component_json(&l), "query": query }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{q, qi};

    fn satellite() -> RteaModel {
        RteaModel::parse(include_str!("../models/satellite.rtea")).unwrap()
    }

    #[test]
    fn reach_and_cover() {
        let m = satellite();
        let out = run_check(
            &m,
            "sat",
            CheckKind::Reach,
            &ExtEnergy::int(50),
            &TimeDur::int(0),
            None,
            false,
        )
        .unwrap();
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.json["value"], "0");
        assert_eq!(out.json["query"]["kind"], "reach");
        let out = run_check(
            &m,
            "sat",
            CheckKind::Cover,
            &ExtEnergy::int(50),
            &TimeDur::int(2),
            Some(&qi(10)),
            true,
        )
        .unwrap();
        assert_eq!(out.json["answer"], true);
        assert_eq!(out.json["value"], "10");
        assert_eq!(out.json["verify"]["consistent"], true);
        let err = run_check(
            &m,
            "sat",
            CheckKind::Cover,
            &ExtEnergy::int(50),
            &TimeDur::int(2),
            None,
            false,
        );
        assert_eq!(err, Err(QueryError::MissingTarget));
        let out = run_check(
            &m,
            "sat",
            CheckKind::Reach,
            &ExtEnergy::int(19),
            &TimeDur::int(1_000_000),
            None,
            false,
        )
        .unwrap();
        assert_eq!(out.exit_code, 1);
        assert_eq!(out.json["value"], "bot");
    }

    #[test]
    fn atoms_text() {
        let atoms = parse_atoms("(0,-20,20), (2, -20, 20),(5,-10,10)").unwrap();
        assert_eq!(atoms.len(), 3);
        assert_eq!(
            parse_atoms("1/2, -1, 1").unwrap(),
            vec![Atom::new(q(1, 2), qi(-1), qi(1)).unwrap()]
        );
        assert!(parse_atoms("(1, 2)").is_err());
        assert!(matches!(parse_atoms("(1, 1, 1)"), Err(QueryError::Atom(_))));
        let out = run_normalize("(0,-20,20),(2,-20,20),(5,-10,10)").unwrap();
        assert_eq!(
            out.json["normal_form"]["atoms"][2],
            json!(["5", "-50", "50"])
        );
    }
}
