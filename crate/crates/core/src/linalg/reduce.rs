use std::ops::Range;

use super::{Matrix, Subspace};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Incremental Gauss-Jordan elimination.
///
/// Rows are fed one at a time and kept fully reduced, so the accumulated
/// rows are always an RREF basis of the row space seen so far (up to row
/// order). Entries that are already zero are skipped, which keeps the large
/// but very sparse structure-constant systems cheap.
#[derive(Clone, Debug)]
pub struct RowReducer {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        RowReducer {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots in place.
    fn reduce(&self, row: &mut [Scalar]) {
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..self.cols {
                if !r[j].is_zero() {
                    row[j].sub_mul_assign(&f, &r[j]);
                }
            }
        }
    }

    /// Adds a row; returns `true` when it raised the rank.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> Result<bool> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        if let Some(s) = row.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: s.field(),
            });
        }
        self.reduce(&mut row);
        let Some(c) = row.iter().position(|s| !s.is_zero()) else {
            return Ok(false);
        };
        let inv = row[c].inv().expect("pivot is non-zero");
        for s in row[c..].iter_mut() {
            if !s.is_zero() {
                *s = &*s * &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if r[c].is_zero() {
                continue;
            }
            let f = r[c].clone();
            for j in c..self.cols {
                if !row[j].is_zero() {
                    r[j].sub_mul_assign(&f, &row[j]);
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(c);
        Ok(true)
    }

    /// Whether `row` already lies in the accumulated row space.
    pub fn spans(&self, row: &[Scalar]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Scalar::is_zero)
    }

    /// Non-zero RREF rows ordered by pivot column.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// Basis of `{x : row · x = 0 for every accumulated row}`.
    pub fn kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![None; self.cols];
        for (idx, &c) in self.pivots.iter().enumerate() {
            is_pivot[c] = Some(idx);
        }
        let zero = Scalar::zero(self.field);
        let one = Scalar::one(self.field);
        (0..self.cols)
            .filter(|&f| is_pivot[f].is_none())
            .map(|f| {
                let mut v = vec![zero.clone(); self.cols];
                v[f] = one.clone();
                for (r, &c) in self.rows.iter().zip(&self.pivots) {
                    if !r[f].is_zero() {
                        v[c] = -&r[f];
                    }
                }
                v
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.field, self.cols, self.kernel_vectors())
            .expect("kernel vectors are well-formed")
    }
}

/// Reduced row echelon form of `m` (same shape, zero rows last) and its rank.
pub fn rref(m: &Matrix) -> Result<(Matrix, usize)> {
    let mut red = RowReducer::new(m.field(), m.cols());
    for row in m.row_vectors() {
        red.push(row)?;
    }
    let rank = red.rank();
    let mut rows = red.basis();
    rows.resize(m.rows(), vec![Scalar::zero(m.field()); m.cols()]);
    Ok((Matrix::from_rows(m.field(), m.cols(), rows)?, rank))
}

/// `{x : m·x = 0}` as a canonical subspace.
pub fn nullspace(m: &Matrix) -> Result<Subspace> {
    let mut red = RowReducer::new(m.field(), m.cols());
    for row in m.row_vectors() {
        red.push(row)?;
    }
    Ok(red.kernel())
}

/// A kernel element together with its projection onto the kept block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedVector {
    pub projected: Vec<Scalar>,
    pub full: Vec<Scalar>,
}

/// Projection of `nullspace(m)` onto the coordinate block `keep`.
pub fn solve_and_project(m: &Matrix, keep: Range<usize>) -> Result<Subspace> {
    let kept = keep.len();
    let lifts = solve_and_lift(m, keep)?;
    Subspace::span(m.field(), kept, lifts.into_iter().map(|l| l.projected))
}

/// Like [`solve_and_project`] but also returns, for each canonical basis
/// vector of the projection, one full kernel vector mapping onto it.
///
/// The kernel is put in RREF with the kept coordinates ordered first; the
/// rows pivoting inside that block then restrict to exactly the RREF of the
/// projection, and the remaining coordinates of those rows are witnesses.
pub fn solve_and_lift(m: &Matrix, keep: Range<usize>) -> Result<Vec<LiftedVector>> {
    let n = m.cols();
    if keep.start > keep.end || keep.end > n {
        return Err(Error::InvalidRange {
            start: keep.start,
            end: keep.end,
            len: n,
        });
    }
    // Column order with the kept block first.
    let order: Vec<usize> = keep.clone().chain((0..n).filter(|j| !keep.contains(j))).collect();
    let kernel = nullspace(m)?;
    let permuted = kernel
        .basis_vectors()
        .into_iter()
        .map(|v| order.iter().map(|&j| v[j].clone()).collect::<Vec<_>>());
    let canon = Subspace::span(m.field(), n, permuted)?;
    let kept = keep.len();
    Ok(canon
        .basis_vectors()
        .into_iter()
        .zip(canon.pivots())
        .filter(|(_, &p)| p < kept)
        .map(|(row, _)| {
            let mut full = vec![Scalar::zero(m.field()); n];
            for (pos, &j) in order.iter().enumerate() {
                full[j] = row[pos].clone();
            }
            LiftedVector {
                projected: row[..kept].to_vec(),
                full,
            }
        })
        .collect())
}
