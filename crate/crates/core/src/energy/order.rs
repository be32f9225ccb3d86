//! Exact decision of the pointwise order `f ≤ g` between energy functions.
//!
//! On each vertical strip between atom bounds, every component is either
//! undefined or has an affine boundary `t = W(x)` and an affine value. The
//! comparison outcome at a fixed `x` can only change in `t` at a boundary or
//! where two values cross, and the ordering of those `t` lines can only change
//! in `x` where two of them intersect. Checking every event point, one point
//! between consecutive events, and one point past the last event in both
//! directions therefore decides the order exactly.

use num_traits::{One, Signed, Zero};

use super::linear::LinearRtef;
use super::region::{extract_regions, piece_at, Line, PieceShape, RegionPiece, ValueForm};
use crate::number::{ExtEnergy, Rational, TimeDur};

/// `f ≤ g` pointwise for two single components.
pub fn leq_linear(f: &LinearRtef, g: &LinearRtef) -> bool {
    if f == g {
        return true;
    }
    refuted_by_samples(f, g).is_none() && dominated_by(f, &[g])
}

/// A sample point where `f > g`, tried at energies where `f` needs no waiting.
fn refuted_by_samples(f: &LinearRtef, g: &LinearRtef) -> Option<(ExtEnergy, TimeDur)> {
    let top = f
        .atoms()
        .last()
        .map_or_else(Rational::zero, |a| a.bound().clone());
    let clear = &top - f.total_price();
    [top, clear]
        .into_iter()
        .flat_map(|x| [0, 1].map(|t| (ExtEnergy::Finite(x.clone()), TimeDur::int(t))))
        .find(|(x, t)| f.eval(x, t) > g.eval(x, t))
}

/// `f ≤ sup(gs)` pointwise.
pub fn leq_components(fs: &[LinearRtef], gs: &[LinearRtef]) -> bool {
    let all: Vec<&LinearRtef> = gs.iter().collect();
    fs.iter()
        .all(|f| gs.iter().any(|g| leq_linear(f, g)) || dominated_by(f, &all))
}

fn active(pieces: &[RegionPiece], x: &Rational) -> Option<(Line, ValueForm)> {
    match &piece_at(pieces, x)?.shape {
        PieceShape::Infeasible => None,
        PieceShape::Active { boundary, value } => Some((boundary.clone(), value.clone())),
    }
}

fn sorted_unique(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

/// The points themselves, the midpoints between neighbours, and one point beyond the last
/// (or up to `upper`, exclusive, when given).
fn with_gaps(points: &[Rational], upper: Option<&Rational>) -> Vec<Rational> {
    let two = Rational::from_integer(2.into());
    let mut out = Vec::with_capacity(points.len() * 2 + 1);
    for (i, p) in points.iter().enumerate() {
        out.push(p.clone());
        match points.get(i + 1).or(upper) {
            Some(next) => out.push((p + next) / &two),
            None => out.push(p + Rational::one()),
        }
    }
    out
}

/// Necessary condition read off the last strip: for large `x` and `t` every
/// component equals `x + r t + p` with its last rate and price, and with
/// unbounded time it is defined from its infinite-time threshold on.
fn dominated_far_out(f: &LinearRtef, gs: &[&LinearRtef]) -> bool {
    let (r, p) = (f.last_rate(), f.total_price());
    let growth = gs.iter().any(|g| {
        let rg = g.last_rate();
        rg > r || (rg == r && g.total_price() >= p)
    });
    let threshold = f.infinite_time_threshold();
    growth && gs.iter().any(|g| g.infinite_time_threshold() <= threshold)
}

fn dominated_by(f: &LinearRtef, gs: &[&LinearRtef]) -> bool {
    if gs.is_empty() || !dominated_far_out(f, gs) {
        return false;
    }
    let f_pieces = extract_regions(f);
    let g_pieces: Vec<Vec<RegionPiece>> = gs.iter().map(|g| extract_regions(g)).collect();
    let cuts = sorted_unique(
        f_pieces
            .iter()
            .chain(g_pieces.iter().flatten())
            .map(|p| p.x_low.clone())
            .collect(),
    );

    for (k, lo) in cuts.iter().enumerate() {
        let hi = cuts.get(k + 1);
        let Some((wf, vf)) = active(&f_pieces, lo) else {
            continue;
        };
        let zero_line = Line {
            slope: Rational::zero(),
            intercept: Rational::zero(),
        };
        let mut lines = vec![zero_line, wf];
        let mut events = vec![lo.clone()];
        let g_forms: Vec<(Line, ValueForm)> =
            g_pieces.iter().filter_map(|p| active(p, lo)).collect();
        for (wg, vg) in &g_forms {
            lines.push(wg.clone());
            let dt = &vf.t_coef - &vg.t_coef;
            let dx = &vf.x_coef - &vg.x_coef;
            let dc = &vf.constant - &vg.constant;
            if !dt.is_zero() {
                lines.push(Line {
                    slope: -(&dx / &dt),
                    intercept: -(&dc / &dt),
                });
            } else if !dx.is_zero() {
                events.push(-(dc / dx));
            }
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if let Some(x) = lines[i].intersect(&lines[j]) {
                    events.push(x);
                }
            }
        }
        events.retain(|x| x >= lo && hi.is_none_or(|h| x < h));
        let events = sorted_unique(events);
        let f_form = (lines[1].clone(), vf);
        for x in with_gaps(&events, hi) {
            if !dominated_at(&f_form, &g_forms, &x, &lines) {
                return false;
            }
        }
    }
    true
}

/// Domination at one `x` of the strip, using the affine forms valid there.
fn dominated_at(
    f: &(Line, ValueForm),
    gs: &[(Line, ValueForm)],
    x: &Rational,
    lines: &[Line],
) -> bool {
    let defined = |w: &Line, t: &Rational| *t >= w.at(x);
    let ts = sorted_unique(
        lines
            .iter()
            .map(|l| l.at(x))
            .filter(|t| !t.is_negative())
            .collect(),
    );
    let finite = with_gaps(&ts, None).into_iter().all(|t| {
        if !defined(&f.0, &t) {
            return true;
        }
        let fv = f.1.at(x, &t);
        gs.iter()
            .any(|(wg, vg)| defined(wg, &t) && vg.at(x, &t) >= fv)
    });
    // With unbounded time every active piece is defined; a positive rate makes it infinite.
    let zero = Rational::zero();
    let at_infinity = f.1.t_coef.is_positive() && gs.iter().any(|(_, vg)| vg.t_coef.is_positive())
        || !f.1.t_coef.is_positive()
            && gs
                .iter()
                .any(|(_, vg)| vg.t_coef.is_positive() || vg.at(x, &zero) >= f.1.at(x, &zero));
    finite && at_infinity
}
