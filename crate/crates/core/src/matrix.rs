//! Integer matrices in compressed sparse-row form.
//!
//! Hurwitz-Radon families are signed permutation matrices, so a `q x q`
//! member has `q` nonzero entries. Products are computed row by row over the
//! stored entries and stay exact for arbitrary integer input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{integer_scaling, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    // (column, value) pairs sorted by column; zeros never stored
    entries: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Row `i` has the single entry `sign` in column `image[i].0`.
    pub fn signed_permutation(image: &[(usize, i64)]) -> Self {
        let n = image.len();
        let entries = image
            .iter()
            .map(|&(c, s)| {
                assert!(c < n, "column {c} out of range");
                vec![(c, s)]
            })
            .collect();
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c, v))
                    .collect(),
            );
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r},{c}) outside {rows}x{cols}"
            );
            *acc[r].entry(c).or_insert(0) += v;
        }
        let entries = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect())
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.cols];
                for &(c, v) in row {
                    dense[c] = v;
                }
                dense
            })
            .collect()
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

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.entries[i]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let row = &self.entries[r];
        row.binary_search_by_key(&c, |&(col, _)| col)
            .map_or(0, |i| row[i].1)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![Vec::new(); self.cols];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                entries[c].push((r, v));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let entries = self
            .entries
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, a) in row {
                    for &(c, b) in &rhs.entries[k] {
                        *acc.entry(c).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        Self {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        }
    }

    /// `self^t * rhs` without materializing the transpose.
    pub fn tr_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); self.cols];
        for (k, row) in self.entries.iter().enumerate() {
            for &(i, a) in row {
                for &(j, b) in &rhs.entries[k] {
                    *acc[i].entry(j).or_insert(0) += a * b;
                }
            }
        }
        let entries = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect())
            .collect();
        Self {
            rows: self.cols,
            cols: rhs.cols,
            entries,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shapes differ"
        );
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, i64> = a.iter().copied().collect();
                for &(c, v) in b {
                    *acc.entry(c).or_insert(0) += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zeros(self.rows, self.cols);
        }
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&(c, v)| (c, v * s)).collect())
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] * rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.rows * rhs.rows);
        for row in &self.entries {
            for inner in &rhs.entries {
                let mut out = Vec::with_capacity(row.len() * inner.len());
                for &(c, a) in row {
                    for &(d, b) in inner {
                        out.push((c * rhs.cols + d, a * b));
                    }
                }
                entries.push(out);
            }
        }
        Self {
            rows: self.rows * rhs.rows,
            cols: self.cols * rhs.cols,
            entries,
        }
    }

    /// Block-diagonal sum of `copies` copies of `self`.
    pub fn block_diag(&self, copies: usize) -> Self {
        IntMatrix::identity(copies).kron(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar(1)
    }

    /// `self == s * Identity`.
    pub fn is_scalar(&self, s: i64) -> bool {
        self.is_square()
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, row)| match row.as_slice() {
                    [] => s == 0,
                    [(c, v)] => *c == i && *v == s,
                    _ => false,
                })
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == self.neg()
    }

    /// Exactly one entry per row and column, each `+1` or `-1`.
    pub fn is_signed_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut seen = vec![false; self.cols];
        for row in &self.entries {
            match row.as_slice() {
                [(c, v)] if v.abs() == 1 && !seen[*c] => seen[*c] = true,
                _ => return false,
            }
        }
        true
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length differs");
        // integer products over a common denominator, one reduction per entry
        let (nums, den) = integer_scaling(v);
        self.entries
            .iter()
            .map(|row| {
                let acc = row.iter().fold(BigInt::zero(), |acc, &(c, a)| match a {
                    1 => acc + &nums[c],
                    -1 => acc - &nums[c],
                    _ => acc + &nums[c] * a,
                });
                Rational::new(acc, den.clone())
            })
            .collect()
    }
}
