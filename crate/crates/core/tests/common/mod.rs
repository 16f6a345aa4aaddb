//! Test-only oracles that share no code path with the library's checkers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use skewfib::{IntMatrix, Rational};

/// Rank by fraction-free elimination over the integers, rows divided by
/// their content after every step.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in 0..ncols {
                row[j] = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
            }
            let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Scales a rational matrix (given by columns) to integers with one common factor.
pub fn integer_columns(cols: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    let l = cols
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nrows = cols.first().map_or(0, Vec::len);
    (0..nrows)
        .map(|i| {
            cols.iter()
                .map(|c| (&c[i] * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

fn dense_apply(m: &[Vec<i64>], y: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter().zip(y).fold(Rational::zero(), |acc, (&a, b)| {
                acc + b * Rational::from_integer(a.into())
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometricVerdict {
    SameFiber,
    Skew,
    Intersecting,
    Parallel,
}

/// Solves the two systems for the fibers `eta = B(y) xi + y` directly:
/// `(B(y1) - B(y2)) xi = y2 - y1` for a common point, and
/// `(B(y1) - B(y2)) xi = 0` with `xi != 0` for a common direction.
pub fn geometric_skewness(
    generators: &[IntMatrix],
    y1: &[Rational],
    y2: &[Rational],
) -> GeometricVerdict {
    if y1 == y2 {
        return GeometricVerdict::SameFiber;
    }
    let dense: Vec<Vec<Vec<i64>>> = generators.iter().map(IntMatrix::to_dense).collect();
    let diff_cols: Vec<Vec<Rational>> = dense
        .iter()
        .map(|m| {
            let a = dense_apply(m, y1);
            let b = dense_apply(m, y2);
            a.iter().zip(&b).map(|(x, z)| x - z).collect()
        })
        .collect();
    let rhs: Vec<Rational> = y2.iter().zip(y1).map(|(a, b)| a - b).collect();
    let p = generators.len();
    let rank_d = if p == 0 {
        0
    } else {
        integer_rank(integer_columns(&diff_cols))
    };
    let mut aug = diff_cols.clone();
    aug.push(rhs);
    let rank_aug = integer_rank(integer_columns(&aug));
    if rank_aug == rank_d {
        GeometricVerdict::Intersecting
    } else if rank_d < p {
        GeometricVerdict::Parallel
    } else {
        GeometricVerdict::Skew
    }
}

pub fn abs_max(v: &[Rational]) -> BigInt {
    v.iter().map(|x| x.numer().abs()).max().unwrap_or_default()
}
