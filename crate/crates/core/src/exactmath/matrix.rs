use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{ExactField, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Ring> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }
}

impl<F: ExactField> Matrix<F> {
    fn integer_rows(&self, extra: Option<&[F]>) -> Vec<Vec<F::Int>> {
        (0..self.rows)
            .map(|i| {
                let mut row: Vec<F> = self.row(i).to_vec();
                if let Some(b) = extra {
                    row.push(b[i].clone());
                }
                integerize(&row)
            })
            .collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows(None);
        bareiss_echelon(&mut m, self.cols).len()
    }

    /// One exact solution of `self * x = b` (free variables set to zero), or `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let n = self.cols;
        let mut m = self.integer_rows(Some(b));
        let pivots = bareiss_echelon(&mut m, n + 1);
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let lift = |v: &F::Int| F::from_ratio(v.clone(), F::Int::one());
        let mut x = vec![F::zero(); n];
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = lift(&m[k][n]);
            for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                if !m[k][j].is_zero() && !xj.is_zero() {
                    acc = acc - lift(&m[k][j]) * xj.clone();
                }
            }
            x[pc] = acc / lift(&m[k][pc]);
        }
        Ok(Some(x))
    }
}

impl<F: Ring + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Scales a rational row by the lcm of its denominators.
pub(crate) fn integerize<F: ExactField>(row: &[F]) -> Vec<F::Int> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(F::Int::one(), |acc, v| acc.lcm(&v.denom_int()));
    row.iter()
        .map(|v| {
            if v.is_zero() {
                F::Int::zero()
            } else {
                v.numer_int() * (lcm.clone() / v.denom_int())
            }
        })
        .collect()
}

/// Bareiss elimination to row echelon form over an integral domain, restricted to the
/// first `cols` columns. Returns the pivot columns. Every intermediate entry is a minor of
/// the input, so each division is exact.
pub(crate) fn bareiss_echelon<I>(m: &mut [Vec<I>], cols: usize) -> Vec<usize>
where
    I: Clone + Integer + Signed,
{
    let rows = m.len();
    let mut prev = I::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..row.len() {
                let num = pivot.clone() * row[j].clone() - lead.clone() * pivot_row[j].clone();
                debug_assert!((num.clone() % prev.clone()).is_zero());
                row[j] = num / prev.clone();
            }
            row[c] = I::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}
