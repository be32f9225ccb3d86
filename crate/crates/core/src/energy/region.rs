//! Piecewise-affine description of a linear energy function over the `(x, t)` plane.

use num_traits::{One, Signed, Zero};

use super::linear::LinearRtef;
use crate::number::{ExtEnergy, Rational, TimeDur};

/// The line `t = slope·x + intercept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Line {
    pub fn at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    /// The `x` where two lines meet, if they are not parallel.
    pub fn intersect(&self, other: &Line) -> Option<Rational> {
        let ds = &self.slope - &other.slope;
        if ds.is_zero() {
            None
        } else {
            Some((&other.intercept - &self.intercept) / ds)
        }
    }
}

/// The affine form `t_coef·t + x_coef·x + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueForm {
    pub t_coef: Rational,
    pub x_coef: Rational,
    pub constant: Rational,
}

impl ValueForm {
    pub fn at(&self, x: &Rational, t: &Rational) -> Rational {
        &self.t_coef * t + &self.x_coef * x + &self.constant
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceShape {
    /// No run exists for any time budget.
    Infeasible,
    /// Defined where `t ≥ max(0, boundary(x))`, with the given value there.
    Active { boundary: Line, value: ValueForm },
}

/// One vertical strip `x_low ≤ x < x_high` of a linear function's domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPiece {
    pub x_low: Rational,
    /// `None` means the strip is unbounded to the right.
    pub x_high: Option<Rational>,
    pub shape: PieceShape,
}

impl RegionPiece {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.x_low <= x && self.x_high.as_ref().is_none_or(|h| x < h)
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self.shape, PieceShape::Active { .. })
    }

    /// Least time at which the piece becomes defined at `x` (clamped to zero).
    pub fn min_time(&self, x: &Rational) -> Option<Rational> {
        match &self.shape {
            PieceShape::Infeasible => None,
            PieceShape::Active { boundary, .. } => {
                let w = boundary.at(x);
                Some(if w.is_negative() { Rational::zero() } else { w })
            }
        }
    }
}

/// Splits the `x` axis at the atom bounds and gives the feasibility boundary and
/// affine value on each strip.
///
/// Between consecutive bounds the optimal run waits first in the state of the
/// next unmet bound, so the boundary has slope `-1/r` for that state's rate `r`
/// and the value has slope `r_last/r` in `x`. Strips of zero width are omitted.
pub fn extract_regions(l: &LinearRtef) -> Vec<RegionPiece> {
    let atoms = l.atoms();
    let Some(last) = atoms.last() else {
        return vec![RegionPiece {
            x_low: Rational::zero(),
            x_high: None,
            shape: PieceShape::Active {
                boundary: Line {
                    slope: Rational::zero(),
                    intercept: Rational::zero(),
                },
                value: ValueForm {
                    t_coef: Rational::zero(),
                    x_coef: Rational::one(),
                    constant: Rational::zero(),
                },
            },
        }];
    };
    let n = atoms.len();
    let mut pieces = Vec::with_capacity(n + 1);
    let mut start = 0;
    if atoms[0].rate().is_zero() {
        let b0 = atoms[0].bound().clone();
        if b0.is_positive() {
            pieces.push(RegionPiece {
                x_low: Rational::zero(),
                x_high: Some(b0.clone()),
                shape: PieceShape::Infeasible,
            });
        }
        if n == 1 {
            pieces.push(RegionPiece {
                x_low: b0,
                x_high: None,
                shape: PieceShape::Active {
                    boundary: Line {
                        slope: Rational::zero(),
                        intercept: Rational::zero(),
                    },
                    value: ValueForm {
                        t_coef: Rational::zero(),
                        x_coef: Rational::one(),
                        constant: last.price().clone(),
                    },
                },
            });
            return pieces;
        }
        start = 1;
    }

    // tail[j] = time to climb from bound j to the last bound, waiting in states j+1..n-1.
    let mut tail = vec![Rational::zero(); n];
    for j in (0..n - 1).rev() {
        let a = &atoms[j + 1];
        tail[j] = &tail[j + 1] + (a.bound() - atoms[j].bound()) / a.rate();
    }

    let r_last = last.rate();
    for j in start..n {
        let x_low = if j == 0 {
            Rational::zero()
        } else {
            atoms[j - 1].bound().clone()
        };
        let x_high = (j + 1 < n).then(|| atoms[j].bound().clone());
        if x_high.as_ref() == Some(&x_low) {
            continue;
        }
        let r = atoms[j].rate();
        let intercept = atoms[j].bound() / r + &tail[j];
        let value = ValueForm {
            t_coef: r_last.clone(),
            x_coef: r_last / r,
            constant: last.bound() + last.price() - r_last * &intercept,
        };
        let boundary = Line {
            slope: -(Rational::one() / r),
            intercept,
        };
        pieces.push(RegionPiece {
            x_low,
            x_high,
            shape: PieceShape::Active { boundary, value },
        });
    }
    pieces
}

/// The piece whose strip contains `x`.
pub fn piece_at<'a>(pieces: &'a [RegionPiece], x: &Rational) -> Option<&'a RegionPiece> {
    pieces.iter().find(|p| p.contains(x))
}

/// Evaluates a function from its region description.
pub fn eval_regions(pieces: &[RegionPiece], x: &ExtEnergy, t: &TimeDur) -> ExtEnergy {
    let x = match x {
        ExtEnergy::Bottom => return ExtEnergy::Bottom,
        ExtEnergy::Infinity => return ExtEnergy::Infinity,
        ExtEnergy::Finite(x) => x,
    };
    let Some(piece) = piece_at(pieces, x) else {
        return ExtEnergy::Bottom;
    };
    let PieceShape::Active { value, .. } = &piece.shape else {
        return ExtEnergy::Bottom;
    };
    let w = piece.min_time(x).expect("active piece");
    match t {
        TimeDur::Finite(t) if t < &w => ExtEnergy::Bottom,
        TimeDur::Finite(t) => ExtEnergy::Finite(value.at(x, t)),
        TimeDur::Infinity if value.t_coef.is_positive() => ExtEnergy::Infinity,
        TimeDur::Infinity => ExtEnergy::Finite(value.at(x, &Rational::zero())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::Atom;
    use crate::number::{q, qi};

    fn lin(atoms: &[(i64, i64, i64)]) -> LinearRtef {
        LinearRtef::normalize(atoms.iter().map(|&(r, p, b)| Atom::int(r, p, b)).collect())
    }

    fn active(p: &RegionPiece) -> (&Line, &ValueForm) {
        match &p.shape {
            PieceShape::Active { boundary, value } => (boundary, value),
            PieceShape::Infeasible => panic!("expected active piece"),
        }
    }

    #[test]
    fn satellite_path_pieces() {
        let pieces = extract_regions(&lin(&[(0, 0, 20), (2, 0, 40), (5, -50, 50)]));
        assert_eq!(pieces.len(), 3);
        assert_eq!(pieces[0].shape, PieceShape::Infeasible);
        assert_eq!(
            (&pieces[0].x_low, &pieces[0].x_high),
            (&qi(0), &Some(qi(20)))
        );

        let (b, v) = active(&pieces[1]);
        assert_eq!(
            (&pieces[1].x_low, &pieces[1].x_high),
            (&qi(20), &Some(qi(40)))
        );
        assert_eq!(b.slope, q(-1, 2));
        assert_eq!(b.at(&qi(20)), qi(12));
        assert_eq!(
            (&v.t_coef, &v.x_coef, &v.constant),
            (&qi(5), &q(5, 2), &qi(-110))
        );

        let (b, v) = active(&pieces[2]);
        assert_eq!((&pieces[2].x_low, &pieces[2].x_high), (&qi(40), &None));
        assert_eq!(b.slope, q(-1, 5));
        assert_eq!(b.at(&qi(40)), qi(2));
        assert_eq!(
            (&v.t_coef, &v.x_coef, &v.constant),
            (&qi(5), &qi(1), &qi(-50))
        );
    }

    #[test]
    fn star_product_pieces() {
        let pieces = extract_regions(&lin(&[(0, 0, 30), (4, 0, 50), (5, -60, 60)]));
        let (_, v) = active(&pieces[1]);
        assert_eq!(
            (&v.t_coef, &v.x_coef, &v.constant),
            (&qi(5), &q(5, 4), &q(-145, 2))
        );
        let (_, v) = active(&pieces[2]);
        assert_eq!(pieces[2].x_low, qi(50));
        assert_eq!(
            (&v.t_coef, &v.x_coef, &v.constant),
            (&qi(5), &qi(1), &qi(-60))
        );
    }

    #[test]
    fn single_atom_piece() {
        let pieces = extract_regions(&lin(&[(3, -1, 1)]));
        assert_eq!(pieces.len(), 1);
        let (b, v) = active(&pieces[0]);
        assert_eq!(pieces[0].x_low, qi(0));
        assert_eq!((&b.slope, &b.intercept), (&q(-1, 3), &q(1, 3)));
        assert_eq!(
            (&v.t_coef, &v.x_coef, &v.constant),
            (&qi(3), &qi(1), &qi(-1))
        );
        assert_eq!(pieces[0].min_time(&qi(5)), Some(qi(0)));
    }

    #[test]
    fn zero_rate_single_atom() {
        let pieces = extract_regions(&lin(&[(0, -1, 1)]));
        assert_eq!(pieces.len(), 2);
        assert!(!pieces[0].is_feasible());
        assert_eq!(
            eval_regions(&pieces, &ExtEnergy::int(5), &TimeDur::int(3)),
            ExtEnergy::int(4)
        );
        assert_eq!(
            eval_regions(&pieces, &ExtEnergy::finite(q(1, 2)), &TimeDur::Infinity),
            ExtEnergy::Bottom
        );
    }

    #[test]
    fn equal_bounds_skip_empty_strips() {
        let l = LinearRtef::from_normal(vec![Atom::int(1, 0, 10), Atom::int(2, -10, 10)]).unwrap();
        let pieces = extract_regions(&l);
        assert!(pieces.iter().all(|p| p.x_high.as_ref() != Some(&p.x_low)));
        for x in 0..30 {
            for t in 0..15 {
                let (x, t) = (ExtEnergy::int(x), TimeDur::int(t));
                assert_eq!(eval_regions(&pieces, &x, &t), l.eval(&x, &t));
            }
        }
    }
}
