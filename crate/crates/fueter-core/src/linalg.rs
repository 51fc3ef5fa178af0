//! Small dense matrices over a generic scalar, with elimination-based
//! rank / nullspace / solve for exact fields.
//!
//! Sizes here are tiny (at most a few dozen rows), so plain Gaussian
//! elimination with exact pivoting is the right tool; for floats the same
//! code runs with magnitude pivoting.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{ComplexScalar, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct CMat<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> CMat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows<I: IntoIterator<Item = S>>(rows: usize, cols: usize, items: I) -> Self {
        let data: Vec<S> = items.into_iter().collect();
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        CMat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMat { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + o.at(i, j).clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - o.at(i, j).clone()
        })
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() * s.clone()
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + a.clone() * o.at(k, j).clone();
                }
            }
        }
        out
    }

    /// Apply the matrix to a column vector.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    pub fn det2(&self) -> S {
        assert!(self.rows == 2 && self.cols == 2);
        self.at(0, 0).clone() * self.at(1, 1).clone()
            - self.at(0, 1).clone() * self.at(1, 0).clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|s| s.abs_f64()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.sub(o).max_abs()
    }

    /// Row-echelon rank.  Exact over exact scalars; for floats, entries with
    /// magnitude below `1e-9 * max` are treated as zero.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let eps = if S::EXACT {
            0.0
        } else {
            1e-9 * self.max_abs().max(1.0)
        };
        let is_zeroish = |s: &S| {
            if S::EXACT {
                s.is_zero()
            } else {
                s.abs_f64() <= eps
            }
        };
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        for col in 0..cols {
            // choose pivot of largest magnitude for float robustness
            let mut piv = None;
            let mut best = 0.0;
            for r in rank..rows {
                let a = m.at(r, col).abs_f64();
                if !is_zeroish(m.at(r, col)) && a > best {
                    best = a;
                    piv = Some(r);
                }
            }
            let Some(p) = piv else { continue };
            m.swap_rows(rank, p);
            let inv = m.at(rank, col).inv().expect("pivot not invertible");
            for c in col..cols {
                let v = m.at(rank, c).clone() * inv.clone();
                *m.at_mut(rank, c) = v;
            }
            for r in 0..rows {
                if r != rank && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..cols {
                        let v = m.at(r, c).clone() - f.clone() * m.at(rank, c).clone();
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right nullspace (exact scalars only).
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        assert!(S::EXACT, "nullspace requires exact arithmetic");
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let piv = (r..rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = piv else { continue };
            m.swap_rows(r, p);
            let inv = m.at(r, col).inv().unwrap();
            for c in col..cols {
                let v = m.at(r, c).clone() * inv.clone();
                *m.at_mut(r, c) = v;
            }
            for i in 0..rows {
                if i != r && !m.at(i, col).is_zero() {
                    let f = m.at(i, col).clone();
                    for c in col..cols {
                        let v = m.at(i, c).clone() - f.clone() * m.at(r, c).clone();
                        *m.at_mut(i, c) = v;
                    }
                }
            }
            pivot_col_of_row.push(col);
            r += 1;
            if r == rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![S::zero(); cols];
            v[free] = S::one();
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl<C: ComplexScalar> CMat<C> {
    /// Entry-wise complex conjugation.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).conj())
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }
}
