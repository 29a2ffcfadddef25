//! Dense exact matrices over Q(i).
//!
//! Rank is computed twice by independent routes: fraction-free Bareiss
//! elimination over the Gaussian integers (after clearing denominators), and
//! reduced row echelon form over the field. The two must always agree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Self {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).conj())
    }

    pub fn hermitian_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let mut v = out.get(r, c).clone();
                    v += &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        Self::from_fn(self.rows + rhs.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                rhs.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn from_columns(ambient: usize, cols: &[Vec<GaussianRational>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == ambient));
        Self::from_fn(ambient, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc += &(self.get(r, c) * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns `(rref, pivot_columns)`.
    /// Pivots take the lowest available row, scanning columns left to right.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c) - &(&f * m.get(row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank by fraction-free Bareiss elimination over Z[i]; cross-checked in
    /// debug builds against the field-elimination rank.
    pub fn rank(&self) -> usize {
        let r = self.bareiss_rank();
        debug_assert_eq!(r, self.rref().1.len(), "Bareiss and RREF ranks disagree");
        r
    }

    fn bareiss_rank(&self) -> usize {
        // Clear denominators row by row to land in Z[i].
        let mut m: Vec<Vec<(BigInt, BigInt)>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    let x = self.get(r, c);
                    lcm = num_integer::lcm(lcm.clone(), x.re.denom().clone());
                    lcm = num_integer::lcm(lcm, x.im.denom().clone());
                }
                (0..self.cols)
                    .map(|c| {
                        let x = self.get(r, c);
                        (scale_to_int(&x.re, &lcm), scale_to_int(&x.im, &lcm))
                    })
                    .collect()
            })
            .collect();

        let (rows, cols) = (self.rows, self.cols);
        let mut prev: (BigInt, BigInt) = (BigInt::one(), BigInt::zero());
        let mut row = 0;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let Some(p) = (row..rows).find(|&r| !gi_is_zero(&m[r][col])) else {
                continue;
            };
            m.swap(row, p);
            let pivot = m[row][col].clone();
            for r in row + 1..rows {
                for c in 0..cols {
                    if c == col {
                        continue;
                    }
                    let t = gi_sub(&gi_mul(&pivot, &m[r][c]), &gi_mul(&m[r][col], &m[row][c]));
                    m[r][c] = gi_exact_div(&t, &prev);
                }
                m[r][col] = (BigInt::zero(), BigInt::zero());
            }
            prev = pivot;
            row += 1;
        }
        row
    }

    /// Nullspace basis as matrix columns (canonical: free variables in
    /// increasing order, each set to 1 in turn).
    pub fn nullspace(&self) -> Self {
        let (rr, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut cols: Vec<Vec<GaussianRational>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -rr.get(pr, f);
            }
            cols.push(v);
        }
        Self::from_columns(self.cols, &cols)
    }

    /// One solution of `self * x = b`, if consistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(self.rows, b.len());
        let rhs = Self::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.get(pr, self.cols).clone();
        }
        Some(x)
    }
}

fn scale_to_int(r: &BigRational, lcm: &BigInt) -> BigInt {
    (r * BigRational::from_integer(lcm.clone())).to_integer()
}

type Gi = (BigInt, BigInt);

fn gi_is_zero(a: &Gi) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

fn gi_mul(a: &Gi, b: &Gi) -> Gi {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gi_sub(a: &Gi, b: &Gi) -> Gi {
    (&a.0 - &b.0, &a.1 - &b.1)
}

/// Exact division in Z[i]; the quotient is known to be integral at every
/// Bareiss step.
fn gi_exact_div(a: &Gi, b: &Gi) -> Gi {
    let n = &b.0 * &b.0 + &b.1 * &b.1;
    assert!(!n.is_zero(), "division by zero Gaussian integer");
    let num = gi_mul(a, &(b.0.clone(), -b.1.clone()));
    let div = |x: BigInt| -> BigInt {
        let (q, r) = num_integer::Integer::div_rem(&x, &n);
        assert!(r.is_zero(), "non-exact division in Bareiss elimination");
        q
    };
    (div(num.0), div(num.1))
}

// Positivity helper used by the metric checks: a Hermitian determinant is a
// real rational; report whether it is strictly positive.
pub fn positive_real(x: &GaussianRational) -> bool {
    x.im.is_zero() && x.re.is_positive()
}

/// Determinant by cofactor-free Bareiss-style elimination over the field.
pub fn determinant(m: &ExactMatrix) -> GaussianRational {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut a = m.clone();
    let mut det = GaussianRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return GaussianRational::zero();
        };
        if p != col {
            for c in 0..n {
                let x = a.get(col, c).clone();
                let y = a.get(p, c).clone();
                a.set(col, c, y);
                a.set(p, c, x);
            }
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            let f = a.get(r, col) * &inv;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a.get(r, c) - &(&f * a.get(col, c));
                a.set(r, c, v);
            }
        }
    }
    det
}
