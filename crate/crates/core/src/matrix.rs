//! Matrices over the energy semiring, their star and `ω`, and automaton behaviours.
//!
//! Matrices are stored row-major. Rectangular matrices occur as blocks of the
//! square ones; star and `ω` require square input.

use std::fmt;
use std::ops::Range;

use crate::energy::Rtef;
use crate::number::{ExtEnergy, TimeDur};
use crate::omega::OmegaVal;

/// A column vector of infinite-run behaviours, one per state.
pub type OmegaVector = Vec<OmegaVal>;

/// Where the block recursion of [`RtefMatrix::star_with`] splits the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    /// Top-left `1×1` block.
    First,
    /// Top-left `⌈n/2⌉ × ⌈n/2⌉` block.
    Half,
}

impl Split {
    fn index(self, n: usize) -> usize {
        match self {
            Split::First => 1,
            Split::Half => n.div_ceil(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RtefMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rtef>,
}

impl RtefMatrix {
    /// The all-`⊥` matrix.
    pub fn bottom(rows: usize, cols: usize) -> Self {
        RtefMatrix {
            rows,
            cols,
            entries: vec![Rtef::bottom(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RtefMatrix::bottom(n, n);
        for i in 0..n {
            m.set(i, i, Rtef::one());
        }
        m
    }

    /// # Panics
    ///
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rtef>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        RtefMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rtef {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rtef) {
        self.entries[i * self.cols + j] = value;
    }

    /// Matrix product with entries `⋁_k self[i][k] ⊙ other[k][j]`.
    ///
    /// # Panics
    ///
    /// If the inner dimensions differ.
    pub fn mul(&self, other: &RtefMatrix) -> RtefMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = RtefMatrix::bottom(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let products = (0..self.cols).flat_map(|k| {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    a.components()
                        .iter()
                        .flat_map(move |x| b.components().iter().map(move |y| x.then(y)))
                });
                out.set(i, j, Rtef::from_components(products).prune());
            }
        }
        out
    }

    /// Entrywise supremum.
    ///
    /// # Panics
    ///
    /// If the dimensions differ.
    pub fn sup(&self, other: &RtefMatrix) -> RtefMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch in matrix sum"
        );
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sup(b))
            .collect();
        RtefMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> RtefMatrix {
        let entries = rows
            .clone()
            .flat_map(|i| cols.clone().map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        RtefMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    fn from_blocks(tl: RtefMatrix, tr: RtefMatrix, bl: RtefMatrix, br: RtefMatrix) -> RtefMatrix {
        let (k, m) = (tl.rows, br.rows);
        let mut out = RtefMatrix::bottom(k + m, k + m);
        for (block, r0, c0) in [(&tl, 0, 0), (&tr, 0, k), (&bl, k, 0), (&br, k, k)] {
            for i in 0..block.rows {
                for j in 0..block.cols {
                    out.set(r0 + i, c0 + j, block.get(i, j).clone());
                }
            }
        }
        out
    }

    /// Entrywise semantic order.
    pub fn leq(&self, other: &RtefMatrix) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.leq(b))
    }

    pub fn equiv(&self, other: &RtefMatrix) -> bool {
        self.leq(other) && other.leq(self)
    }

    /// Kleene star, splitting off the top-left entry at each level.
    pub fn star(&self) -> RtefMatrix {
        self.star_with(Split::First)
    }

    /// Kleene star by block recursion.
    ///
    /// For `M = [a b; c d]` with `D = d*` and `S = (a ∨ b D c)*`:
    /// `M* = [S, S b D; D c S, D ∨ D c S b D]`.
    ///
    /// # Panics
    ///
    /// If the matrix is not square.
    pub fn star_with(&self, split: Split) -> RtefMatrix {
        assert!(self.is_square(), "star of a non-square matrix");
        let n = self.rows;
        match n {
            0 => return RtefMatrix::bottom(0, 0),
            1 => return RtefMatrix::from_rows(vec![vec![self.get(0, 0).star()]]),
            _ => {}
        }
        let k = split.index(n);
        let (a, b) = (self.block(0..k, 0..k), self.block(0..k, k..n));
        let (c, d) = (self.block(k..n, 0..k), self.block(k..n, k..n));
        let ds = d.star_with(split);
        let dc = ds.mul(&c);
        let bd = b.mul(&ds);
        let s = a.sup(&b.mul(&dc)).star_with(split);
        let tr = s.mul(&bd);
        let bl = dc.mul(&s);
        let br = ds.sup(&bl.mul(&bd));
        RtefMatrix::from_blocks(s, tr, bl, br)
    }

    /// `self ⊙ v`: entry `i` is `⋁_j self[i][j] ⊙ v[j]`.
    ///
    /// # Panics
    ///
    /// If `v` does not have one entry per column.
    pub fn act(&self, v: &[OmegaVal]) -> OmegaVector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix action");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self.get(i, j).is_bottom())
                    .fold(OmegaVal::never(), |acc, j| {
                        acc.sup(&OmegaVal::act(self.get(i, j), &v[j]))
                    })
            })
            .collect()
    }

    /// `M^ω`: entry `i` holds the infinite runs starting in state `i`.
    ///
    /// Splitting off state `0` with `s = a ∨ b d* c`, a run from `0` either
    /// returns to `0` forever (`s^ω`) or finitely often and then stays in the
    /// rest (`s* b d^ω`). A run from the rest either never reaches `0`
    /// (`d^ω`) or reaches it (`d* c` followed by a run from `0`).
    ///
    /// # Panics
    ///
    /// If the matrix is not square.
    pub fn omega(&self) -> OmegaVector {
        assert!(self.is_square(), "ω of a non-square matrix");
        let n = self.rows;
        match n {
            0 => return Vec::new(),
            1 => return vec![OmegaVal::omega_of(self.get(0, 0))],
            _ => {}
        }
        let b = self.block(0..1, 1..n);
        let c = self.block(1..n, 0..1);
        let d = self.block(1..n, 1..n);
        let ds = d.star();
        let dc = ds.mul(&c);
        let s = self.get(0, 0).sup(b.mul(&dc).get(0, 0));
        let dw = d.omega();
        let leave = b.act(&dw).remove(0);
        let top = OmegaVal::omega_of(&s).sup(&OmegaVal::act(&s.star(), &leave));
        let via_top = dc.act(std::slice::from_ref(&top));
        std::iter::once(top.clone())
            .chain(dw.iter().zip(&via_top).map(|(x, y)| x.sup(y)))
            .collect()
    }

    /// `M^ω` by the symmetric block formula
    /// `[(a ∨ b d* c)^ω ∨ (a ∨ b d* c)* b d^ω; (d ∨ c a* b)^ω ∨ (d ∨ c a* b)* c a^ω]`
    /// with a `1×1` top-left block.
    ///
    /// Exponential in the dimension; meant for cross-checking [`RtefMatrix::omega`].
    pub fn omega_block_formula(&self) -> OmegaVector {
        assert!(self.is_square(), "ω of a non-square matrix");
        let n = self.rows;
        match n {
            0 => return Vec::new(),
            1 => return vec![OmegaVal::omega_of(self.get(0, 0))],
            _ => {}
        }
        let a = self.block(0..1, 0..1);
        let b = self.block(0..1, 1..n);
        let c = self.block(1..n, 0..1);
        let d = self.block(1..n, 1..n);
        let s = a.sup(&b.mul(&d.star()).mul(&c));
        let top =
            s.omega_block_formula()[0].sup(&s.star().mul(&b).act(&d.omega_block_formula())[0]);
        let as_ = a.star();
        let t = d.sup(&c.mul(&as_).mul(&b));
        let tw = t.omega_block_formula();
        let tail = t.star().mul(&c).act(&a.omega_block_formula());
        std::iter::once(top)
            .chain(tw.iter().zip(&tail).map(|(x, y)| x.sup(y)))
            .collect()
    }

    /// Infinite runs visiting one of the first `k` states infinitely often.
    ///
    /// With `M = [a b; c d]` split after the accepting block, the first `k`
    /// entries are `(a ∨ b d* c)^ω` and the rest are `d* c` acting on them.
    pub fn omega_accepting(&self, k: usize) -> OmegaVector {
        assert!(self.is_square(), "ω of a non-square matrix");
        let n = self.rows;
        assert!(k <= n, "accepting block larger than the matrix");
        if k == 0 {
            return vec![OmegaVal::never(); n];
        }
        let a = self.block(0..k, 0..k);
        let b = self.block(0..k, k..n);
        let c = self.block(k..n, 0..k);
        let d = self.block(k..n, k..n);
        let dc = d.star().mul(&c);
        let returns = if k == n { a } else { a.sup(&b.mul(&dc)) };
        let top = returns.omega();
        let bottom = if k == n { Vec::new() } else { dc.act(&top) };
        top.into_iter().chain(bottom).collect()
    }
}

impl fmt::Display for RtefMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_bottom() {
                    writeln!(f, "[{i}][{j}] = {e}")?;
                }
            }
        }
        Ok(())
    }
}

/// An automaton as `(α, M, k)`: initial flags, transition matrix, and the
/// number of accepting states, which occupy indices `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomatonRep {
    alpha: Vec<bool>,
    matrix: RtefMatrix,
    k: usize,
}

impl AutomatonRep {
    /// # Panics
    ///
    /// If the matrix is not square, `alpha` has the wrong length, or `k > n`.
    pub fn new(alpha: Vec<bool>, matrix: RtefMatrix, k: usize) -> Self {
        assert!(matrix.is_square(), "transition matrix must be square");
        assert_eq!(alpha.len(), matrix.rows(), "one initial flag per state");
        assert!(k <= matrix.rows(), "more accepting states than states");
        AutomatonRep { alpha, matrix, k }
    }

    pub fn alpha(&self) -> &[bool] {
        &self.alpha
    }

    pub fn matrix(&self) -> &RtefMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn accepting_count(&self) -> usize {
        self.k
    }

    /// `κ`: the accepting indicator.
    pub fn kappa(&self) -> Vec<bool> {
        (0..self.dim()).map(|i| i < self.k).collect()
    }

    fn initial(&self) -> impl Iterator<Item = usize> + '_ {
        self.alpha
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| a.then_some(i))
    }

    /// `|A| = α M* κ`.
    pub fn finite_behavior(&self) -> Rtef {
        let star = self.matrix.star();
        let mut acc = Rtef::bottom();
        for i in self.initial() {
            for j in 0..self.k {
                acc = acc.sup(star.get(i, j));
            }
        }
        acc
    }

    pub fn eval(&self, x: &ExtEnergy, t: &TimeDur) -> ExtEnergy {
        self.finite_behavior().eval(x, t)
    }

    /// `‖A‖`: runs from an initial state that visit accepting states infinitely often.
    pub fn buchi_behavior(&self) -> OmegaVal {
        let v = self.matrix.omega_accepting(self.k);
        self.initial()
            .fold(OmegaVal::never(), |acc, i| acc.sup(&v[i]))
    }
}
