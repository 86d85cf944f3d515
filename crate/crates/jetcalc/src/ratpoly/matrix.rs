//! Exact Gaussian elimination over the rationals: rank, reduced row echelon
//! form, and kernel bases.
//!
//! Dense representation. Invariant-dimension instances stay well under a few
//! thousand columns, so no sparsity tricks are attempted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A dense matrix of exact rationals, rows = constraints, columns = unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> QMatrix {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        QMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r][c] = v;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns in increasing order. Deterministic: the pivot is the first
    /// row with a nonzero entry in the current column.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self.data[r][col].is_zero()) else {
                continue;
            };
            self.data.swap(row, p);
            let inv = self.data[row][col].clone().recip();
            for c in col..self.cols {
                let v = &self.data[row][c] * &inv;
                self.data[row][c] = v;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let v = &self.data[r][c] - &(&factor * &self.data[row][c]);
                        self.data[r][c] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }
}

/// Rank by exact elimination.
pub fn rank(matrix: &QMatrix) -> usize {
    matrix.clone().rref().len()
}

/// Exact basis of the kernel. Each vector is normalized to integer entries
/// with content 1 and the first nonzero entry positive; vectors are ordered
/// by their defining free column. An empty matrix (no rows) yields the full
/// standard basis.
pub fn nullspace(matrix: &QMatrix) -> Vec<Vec<Rational>> {
    let cols = matrix.cols();
    let mut reduced = matrix.clone();
    let pivots = reduced.rref();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut map = vec![None; cols];
        for (i, &c) in pivots.iter().enumerate() {
            map[c] = Some(i);
        }
        map
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -reduced.get(i, free).clone();
        }
        basis.push(normalize_kernel_vector(&v));
    }
    basis
}

/// Scale to integer entries, divide by the content, and make the first
/// nonzero entry positive.
pub fn normalize_kernel_vector(v: &[Rational]) -> Vec<Rational> {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for x in v {
        if !x.is_zero() {
            den_lcm = den_lcm.lcm(x.denom());
            num_gcd = num_gcd.gcd(x.numer());
        }
    }
    if num_gcd.is_zero() {
        return v.to_vec();
    }
    let mut scale = Rational::new(den_lcm, num_gcd.abs());
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if (first * &scale).is_negative() {
            scale = -scale;
        }
    }
    v.iter().map(|x| x * &scale).collect()
}
