//! Brute-force reference computations, independent of the algebra.
//!
//! These work directly on runs: discretised dynamic programming, explicit
//! search over time splits, linear programming over the delays of a path, and
//! lasso unrolling. They under-approximate and are meant for cross-checking.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::energy::{Atom, LinearRtef};
use crate::matrix::RtefMatrix;
use crate::model::{RteaModel, Transition};
use crate::number::{ExtEnergy, Rational, TimeDur};

/// Discretisation of a finite horizon into `max_steps` steps of length `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpConfig {
    pub delta: Rational,
    pub max_steps: usize,
}

impl DpConfig {
    /// # Panics
    ///
    /// If `delta ≤ 0` or `horizon` is not a multiple of `delta`.
    pub fn for_horizon(horizon: &Rational, delta: Rational) -> Self {
        assert!(delta.is_positive(), "time step must be positive");
        let steps = horizon / &delta;
        assert!(
            steps.is_integer(),
            "horizon must be a multiple of the time step"
        );
        let max_steps = steps
            .to_integer()
            .try_into()
            .expect("step count fits in usize");
        DpConfig { delta, max_steps }
    }
}

/// Best energy on arrival at an accepting state when all delays are multiples
/// of `cfg.delta` and the total time is at most `delta · max_steps`.
pub fn dp_lower_bound(m: &RteaModel, x0: &Rational, cfg: &DpConfig) -> ExtEnergy {
    let names: Vec<&str> = m.states().iter().map(|s| s.name.as_str()).collect();
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let rates: Vec<Rational> = m.states().iter().map(|s| s.rate.clone()).collect();
    let edges: Vec<(usize, usize, &Transition)> = m
        .transitions()
        .iter()
        .map(|t| (index[t.src.as_str()], index[t.dst.as_str()], t))
        .collect();
    let accepting: Vec<bool> = m.states().iter().map(|s| s.accepting).collect();

    let n = names.len();
    let mut energy: Vec<Option<Rational>> = vec![None; n];
    energy[index[m.initial().name.as_str()]] = Some(x0.clone());
    // Energy is credited on arrival only; waiting in an accepting state afterwards does not count.
    let mut best: Option<Rational> =
        accepting[index[m.initial().name.as_str()]].then(|| x0.clone());
    for step in 0..=cfg.max_steps {
        // Transitions take no time; prices are non-positive, so n rounds reach the fixpoint.
        for _ in 0..n {
            let mut changed = false;
            for &(i, j, t) in &edges {
                let Some(e) = &energy[i] else { continue };
                if e >= &t.bound {
                    let next = e + &t.price;
                    if accepting[j] && best.as_ref().is_none_or(|b| &next > b) {
                        best = Some(next.clone());
                    }
                    if energy[j].as_ref().is_none_or(|cur| &next > cur) {
                        energy[j] = Some(next);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if step < cfg.max_steps {
            for (s, e) in energy.iter_mut().enumerate() {
                if let Some(e) = e {
                    *e += &rates[s] * &cfg.delta;
                }
            }
        }
    }
    best.map_or(ExtEnergy::Bottom, ExtEnergy::Finite)
}

/// `max_{t1 ∈ {0, t/grid, …, t}} l2(l1(x, t1), t − t1)`.
pub fn compose_split_oracle(
    l1: &LinearRtef,
    l2: &LinearRtef,
    x: &ExtEnergy,
    t: &Rational,
    grid: usize,
) -> ExtEnergy {
    assert!(grid > 0, "grid must have at least one step");
    (0..=grid)
        .map(|k| {
            let t1 = t * Rational::from_integer(k.into()) / Rational::from_integer(grid.into());
            let t2 = t - &t1;
            l2.eval(&l1.eval(x, &TimeDur::Finite(t1)), &TimeDur::Finite(t2))
        })
        .max()
        .expect("grid is non-empty")
}

/// Exact value of an arbitrary atom sequence `a_n ∘ … ∘ a_1` at `(x, t)`.
///
/// The delays `w_i` before each transition form a polytope
/// `{w ≥ 0, Σ w = t, x + Σ_{j≤i} r_j w_j + Σ_{j<i} p_j ≥ b_i}` and the output
/// energy is linear in `w`, so the optimum is attained at a vertex. All
/// vertices are enumerated.
pub fn eval_sequence(atoms: &[Atom], x: &ExtEnergy, t: &Rational) -> ExtEnergy {
    let x = match x {
        ExtEnergy::Finite(x) => x,
        other => return other.clone(),
    };
    let n = atoms.len();
    if n == 0 {
        return ExtEnergy::Finite(x.clone());
    }
    // Inequalities `row · w ≥ rhs`: first the bounds, then non-negativity.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(2 * n);
    let mut spent = Rational::zero();
    for i in 0..n {
        let row = (0..n)
            .map(|j| {
                if j <= i {
                    atoms[j].rate().clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        rows.push((row, atoms[i].bound() - x + &spent));
        spent -= atoms[i].price();
    }
    for i in 0..n {
        rows.push((
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
            Rational::zero(),
        ));
    }
    let total_price: Rational = atoms.iter().map(|a| a.price().clone()).sum();
    let mut best: Option<Rational> = None;
    for active in combinations(rows.len(), n - 1) {
        let mut system: Vec<(Vec<Rational>, Rational)> =
            active.iter().map(|&k| rows[k].clone()).collect();
        system.push((vec![Rational::one(); n], t.clone()));
        let Some(w) = solve(system) else { continue };
        let feasible = rows.iter().all(|(row, rhs)| dot(row, &w) >= *rhs);
        if feasible {
            let value =
                x + dot(
                    &atoms.iter().map(|a| a.rate().clone()).collect::<Vec<_>>(),
                    &w,
                ) + &total_price;
            if best.as_ref().is_none_or(|b| &value > b) {
                best = Some(value);
            }
        }
    }
    best.map_or(ExtEnergy::Bottom, ExtEnergy::Finite)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Gaussian elimination on a square system; `None` if singular.
fn solve(mut system: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<Rational>> {
    let n = system.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !system[r].0[col].is_zero())?;
        system.swap(col, pivot);
        let (prow, prhs) = system[col].clone();
        for (r, (row, rhs)) in system.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = &row[col] / &prow[col];
                for (entry, p) in row.iter_mut().zip(&prow) {
                    *entry -= &factor * p;
                }
                *rhs -= &factor * &prhs;
            }
        }
    }
    Some(
        system
            .iter()
            .enumerate()
            .map(|(i, (row, rhs))| rhs / &row[i])
            .collect(),
    )
}

/// `⋁_{ℓ ≤ max_len} M^ℓ`, the supremum over all paths of at most `max_len` steps.
pub fn path_sum(m: &RtefMatrix, max_len: usize) -> RtefMatrix {
    let n = m.rows();
    let mut acc = RtefMatrix::identity(n);
    let mut power = RtefMatrix::identity(n);
    for _ in 0..max_len {
        power = power.mul(m);
        acc = acc.sup(&power);
    }
    acc
}

/// The supremum over all paths, by squaring `1 ∨ M` until the value stops
/// changing; `None` if that takes more than `max_rounds` squarings.
pub fn path_sum_closure(m: &RtefMatrix, max_rounds: usize) -> Option<RtefMatrix> {
    let id = RtefMatrix::identity(m.rows());
    let mut acc = id.sup(m);
    for _ in 0..max_rounds {
        let next = id.sup(&m.mul(&acc));
        if next.equiv(&acc) {
            return Some(acc);
        }
        acc = next;
    }
    None
}

/// Whether a cycle of zero-price transitions through an accepting state is reachable.
pub fn has_reachable_zero_price_accepting_cycle(m: &RteaModel) -> bool {
    lassos(m)
        .into_iter()
        .any(|(_, cycle)| cycle.iter().all(|t| t.price.is_zero()))
}

/// Simple paths from the initial state to some state `c`, paired with simple
/// cycles from `c` through an accepting state.
fn lassos(m: &RteaModel) -> Vec<(Vec<&Transition>, Vec<&Transition>)> {
    let mut prefixes: Vec<(String, Vec<&Transition>)> = Vec::new();
    let start = m.initial().name.clone();
    simple_paths(
        m,
        &start,
        &mut vec![start.clone()],
        &mut Vec::new(),
        &mut prefixes,
    );
    let mut out = Vec::new();
    for (c, prefix) in prefixes {
        let mut cycles = Vec::new();
        simple_cycles(
            m,
            &c,
            &c,
            &mut vec![c.clone()],
            &mut Vec::new(),
            &mut cycles,
        );
        for cycle in cycles {
            let through_accepting = cycle
                .iter()
                .any(|t| m.state(&t.dst).is_some_and(|s| s.accepting));
            if through_accepting {
                out.push((prefix.clone(), cycle));
            }
        }
    }
    out
}

fn simple_paths<'a>(
    m: &'a RteaModel,
    at: &str,
    visited: &mut Vec<String>,
    path: &mut Vec<&'a Transition>,
    out: &mut Vec<(String, Vec<&'a Transition>)>,
) {
    out.push((at.to_string(), path.clone()));
    for t in m.transitions().iter().filter(|t| t.src == at) {
        if !visited.contains(&t.dst) {
            visited.push(t.dst.clone());
            path.push(t);
            simple_paths(m, &t.dst, visited, path, out);
            path.pop();
            visited.pop();
        }
    }
}

fn simple_cycles<'a>(
    m: &'a RteaModel,
    home: &str,
    at: &str,
    visited: &mut Vec<String>,
    path: &mut Vec<&'a Transition>,
    out: &mut Vec<Vec<&'a Transition>>,
) {
    for t in m.transitions().iter().filter(|t| t.src == at) {
        path.push(t);
        if t.dst == home {
            out.push(path.clone());
        } else if !visited.contains(&t.dst) {
            visited.push(t.dst.clone());
            simple_cycles(m, home, &t.dst, visited, path, out);
            visited.pop();
        }
        path.pop();
    }
}

/// Runs `path` from energy `e` with the given delays; returns the final energy.
fn simulate(
    m: &RteaModel,
    path: &[&Transition],
    delays: &[Rational],
    mut e: Rational,
) -> Option<Rational> {
    for (t, d) in path.iter().zip(delays) {
        e += &m.state(&t.src)?.rate * d;
        if e < t.bound {
            return None;
        }
        e += &t.price;
    }
    Some(e)
}

/// Smallest delays that keep `path` feasible from energy `e`, with the resulting energy.
fn minimal_delays(
    m: &RteaModel,
    path: &[&Transition],
    mut e: Rational,
) -> Option<(Vec<Rational>, Rational)> {
    let mut delays = Vec::with_capacity(path.len());
    for t in path {
        let rate = &m.state(&t.src)?.rate;
        let mut d = Rational::zero();
        if e < t.bound {
            if rate.is_zero() {
                return None;
            }
            d = (&t.bound - &e) / rate;
            e = t.bound.clone();
        }
        e += &t.price;
        delays.push(d);
    }
    Some((delays, e))
}

/// All ways to put `units` indistinguishable grid units into `slots` slots, at most `units` in total.
fn allocations(slots: usize, units: usize) -> Vec<Vec<usize>> {
    fn go(slots: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == slots {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            go(slots, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(slots, units, &mut Vec::with_capacity(slots), &mut out);
    out
}

const GRID: usize = 8;

/// Searches for an accepting lasso run from `x0` within time `t`.
///
/// The prefix and the first pass through the cycle use delays on a grid of
/// `t/8`. Later passes wait only as long as needed, pass `k` within half the
/// time left after pass `k − 1`. With finite `t` a run is accepted once a pass
/// needs no waiting and loses no energy, since it then repeats forever in zero
/// time. With `t = ∞` it is accepted once a pass ends with at least the energy
/// it started with. At most `repetitions` passes are tried; `false` is
/// inconclusive.
pub fn buchi_unroll(m: &RteaModel, x0: &Rational, t: &TimeDur, repetitions: usize) -> bool {
    lassos(m).into_iter().any(|(prefix, cycle)| match t {
        TimeDur::Finite(t) => unroll_finite(m, x0, t, &prefix, &cycle, repetitions),
        TimeDur::Infinity => unroll_infinite(m, x0, &prefix, &cycle, repetitions),
    })
}

fn unroll_finite(
    m: &RteaModel,
    x0: &Rational,
    t: &Rational,
    prefix: &[&Transition],
    cycle: &[&Transition],
    repetitions: usize,
) -> bool {
    let path: Vec<&Transition> = prefix.iter().chain(cycle).copied().collect();
    let unit = t / Rational::from_integer(GRID.into());
    for alloc in allocations(path.len(), GRID) {
        let delays: Vec<Rational> = alloc
            .iter()
            .map(|&k| &unit * Rational::from_integer(k.into()))
            .collect();
        let Some(mut e) = simulate(m, &path, &delays, x0.clone()) else {
            continue;
        };
        let mut left = t - delays.iter().sum::<Rational>();
        for _ in 0..repetitions {
            let Some((d, next)) = minimal_delays(m, cycle, e.clone()) else {
                break;
            };
            let used: Rational = d.iter().sum();
            if used.is_zero() && next >= e {
                return true;
            }
            let budget = &left / Rational::from_integer(2.into());
            if used > budget {
                break;
            }
            left -= used;
            e = next;
        }
    }
    false
}

fn unroll_infinite(
    m: &RteaModel,
    x0: &Rational,
    prefix: &[&Transition],
    cycle: &[&Transition],
    repetitions: usize,
) -> bool {
    let Some((_, mut e)) = minimal_delays(m, prefix, x0.clone()) else {
        return false;
    };
    // Extra waiting goes to the fastest state of the cycle.
    let fastest = (0..cycle.len())
        .max_by_key(|&i| m.state(&cycle[i].src).map(|s| s.rate.clone()))
        .expect("cycles are non-empty");
    for _ in 0..repetitions {
        let Some((delays, next)) = minimal_delays(m, cycle, e.clone()) else {
            return false;
        };
        for extra in [0, 1, 10, 100, 1000] {
            let mut d = delays.clone();
            d[fastest] += Rational::from_integer(extra.into());
            if simulate(m, cycle, &d, e.clone()).is_some_and(|after| after >= e) {
                return true;
            }
        }
        e = next;
    }
    false
}
