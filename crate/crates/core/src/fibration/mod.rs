//! Skew affine fibrations of `R^n` built from normalized Hurwitz-Radon families.
//!
//! Write `R^n = R^p (+) R^q`. Given skew generators `M_1..M_p` on `R^q`, the
//! fiber over `y in R^q` is the graph `eta = B(y) xi + y` where `B(y)` has
//! columns `M_i y`. Two fibers over `y1 != y2` are skew exactly when the
//! `q x (p+1)` matrix `A(y1 - y2) = [M_1 d | ... | M_p d | d]` has trivial
//! kernel; for a Hurwitz-Radon family `A(d)^t A(d) = |d|^2 I`, so that always
//! holds.

mod compose;
mod export;

pub use compose::{compose, ComposedFibration};
pub use export::{
    circle_base_points, export_fiber_samples, samples_to_csv, samples_to_jsonl, FiberSample,
};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hrfamily::{construct_family, normalize_last_identity, NormalizedFamily};
use crate::linalg::{
    clear_denominators, dot, integer_scaling, is_zero_vec, sub, QMatrix, Rational,
};
use crate::matrix::IntMatrix;
use crate::poly::{Poly, Var};
use crate::rho::{exists_fibration, rho};
use crate::sampling::RationalSampler;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewFibration {
    p: usize,
    q: usize,
    generators: NormalizedFamily,
    /// Generators are skew, anticommuting and square to `-I`, so
    /// `C^t C = (1 + |xi|^2) I` for `C = I + sum xi_i M_i`.
    orthogonal: bool,
}

/// One affine fiber `basepoint + span(directions)`, lying over `base_coordinate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSpec {
    pub basepoint: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
    pub base_coordinate: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkewVerdict {
    Skew,
    SameFiber,
    /// The fibers meet or share a direction; `kernel` spans the offending relations.
    Violation {
        kernel: Vec<Vec<Rational>>,
    },
}

impl SkewVerdict {
    pub fn is_skew(&self) -> bool {
        matches!(self, SkewVerdict::Skew)
    }
}

#[derive(Serialize, Deserialize)]
struct FibrationFile {
    p: usize,
    q: usize,
    generators: Vec<Vec<Vec<i64>>>,
}

impl SkewFibration {
    /// Validates the generators: normalized-family invariants and `p <= rho(q) - 1`.
    pub fn from_generators(generators: NormalizedFamily) -> Result<Self> {
        let (p, q) = (generators.p(), generators.q);
        if q == 0 {
            return Err(Error::ZeroDimension);
        }
        if !exists_fibration(p as u64, (p + q) as u64)? {
            return Err(Error::NotRealizable {
                p: p as u64,
                n: (p + q) as u64,
                rho_q: rho(q as u64)?,
            });
        }
        let failures = generators.invariant_failures();
        if !failures.is_empty() {
            return Err(Error::InvalidFamily(failures.join("; ")));
        }
        Ok(Self {
            p,
            q,
            generators,
            orthogonal: true,
        })
    }

    /// Any linear family `y -> [M_1 y | ... | M_p y | y]` of square integer
    /// matrices, without checking that it gives a fibration. Used to
    /// exercise the skewness checker on degenerate families.
    pub fn from_generators_unchecked(q: usize, matrices: Vec<IntMatrix>) -> Self {
        assert!(
            matrices.iter().all(|m| m.rows() == q && m.cols() == q),
            "generators must be {q}x{q}"
        );
        Self {
            p: matrices.len(),
            q,
            generators: NormalizedFamily { q, matrices },
            orthogonal: false,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn generators(&self) -> &NormalizedFamily {
        &self.generators
    }

    /// Columns `M_1 y, ..., M_p y` of `B(y)`.
    pub fn b_columns(&self, y: &[Rational]) -> Vec<Vec<Rational>> {
        assert_eq!(y.len(), self.q, "base point must lie in R^{}", self.q);
        self.generators
            .matrices
            .iter()
            .map(|m| m.mul_vec(y))
            .collect()
    }

    /// `A(y) = [B(y) | y]`, a `q x (p+1)` matrix.
    pub fn a_matrix(&self, y: &[Rational]) -> QMatrix {
        let mut cols = self.b_columns(y);
        cols.push(y.to_vec());
        QMatrix::from_columns(&cols)
    }

    /// `B(y) xi` for `xi in R^p`.
    pub fn b_apply(&self, y: &[Rational], xi: &[Rational]) -> Vec<Rational> {
        assert_eq!(xi.len(), self.p);
        assert_eq!(y.len(), self.q, "base point must lie in R^{}", self.q);
        // sum x_i M_i Y over the common denominator d D
        let (x, d) = integer_scaling(xi);
        let (ys, big_d) = integer_scaling(y);
        let mut out = vec![BigInt::zero(); self.q];
        for (m, xk) in self.generators.matrices.iter().zip(&x) {
            if xk.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let row: BigInt = m.row(k).iter().map(|&(c, v)| &ys[c] * v).sum();
                *o += row * xk;
            }
        }
        let den = d * big_d;
        out.into_iter()
            .map(|v| Rational::new(v, den.clone()))
            .collect()
    }

    /// The point `(xi, B(y) xi + y)` of the fiber over `y`.
    pub fn point_on_fiber(&self, y: &[Rational], xi: &[Rational]) -> Vec<Rational> {
        let eta: Vec<Rational> = self
            .b_apply(y, xi)
            .into_iter()
            .zip(y)
            .map(|(a, b)| a + b)
            .collect();
        xi.iter().cloned().chain(eta).collect()
    }

    pub fn to_json(&self) -> String {
        let file = FibrationFile {
            p: self.p,
            q: self.q,
            generators: self
                .generators
                .matrices
                .iter()
                .map(IntMatrix::to_dense)
                .collect(),
        };
        let mut s = serde_json::to_string(&file).expect("plain data");
        s.push('\n');
        s
    }

    /// Reads a fibration file and re-validates the generators.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: FibrationFile = serde_json::from_str(text)?;
        if file.generators.len() != file.p {
            return Err(Error::Parse(format!(
                "p = {} but {} generators given",
                file.p,
                file.generators.len()
            )));
        }
        let matrices = file
            .generators
            .iter()
            .map(|m| IntMatrix::from_dense(m))
            .collect::<Result<Vec<_>>>()?;
        if matrices
            .iter()
            .any(|m| m.rows() != file.q || m.cols() != file.q)
        {
            return Err(Error::DimensionMismatch(format!(
                "generators must be {q}x{q}",
                q = file.q
            )));
        }
        Self::from_generators(NormalizedFamily {
            q: file.q,
            matrices,
        })
    }
}

/// The fibration of `R^n` by skew `p`-planes from the first `p` normalized
/// generators of the maximal family in dimension `q = n - p`.
pub fn build_fibration(p: usize, n: usize) -> Result<SkewFibration> {
    if !exists_fibration(p as u64, n as u64)? {
        let q = (n - p) as u64;
        return Err(Error::NotRealizable {
            p: p as u64,
            n: n as u64,
            rho_q: rho(q)?,
        });
    }
    let q = n - p;
    let generators = normalize_last_identity(&construct_family(q)?)?.truncate(p);
    Ok(SkewFibration {
        p,
        q,
        generators,
        orthogonal: true,
    })
}

/// Basepoint `(0, y)` and directions `(e_i, M_i y)`.
pub fn fiber_through(fib: &SkewFibration, y: &[Rational]) -> FiberSpec {
    let p = fib.p;
    let basepoint = vec![Rational::zero(); p]
        .into_iter()
        .chain(y.iter().cloned())
        .collect();
    let directions = fib
        .b_columns(y)
        .into_iter()
        .enumerate()
        .map(|(i, col)| {
            let mut d = vec![Rational::zero(); p];
            d[i] = Rational::one();
            d.extend(col);
            d
        })
        .collect();
    FiberSpec {
        basepoint,
        directions,
        base_coordinate: y.to_vec(),
    }
}

/// The base point `y` of the unique fiber through `point = (xi, eta)`,
/// found by solving `(I + sum xi_i M_i) y = eta` exactly.
///
/// Panics if the system is singular, which cannot happen for a validated
/// fibration.
pub fn project(fib: &SkewFibration, point: &[Rational]) -> Vec<Rational> {
    assert_eq!(point.len(), fib.n(), "point must lie in R^{}", fib.n());
    let (xi, eta) = point.split_at(fib.p);
    // xi = x / d and eta = e / f with integer x, e
    let (x, d) = integer_scaling(xi);
    let (e, f) = integer_scaling(eta);

    // sparse rows of d C = d I + sum x_i M_i
    let mut rows: Vec<BTreeMap<usize, BigInt>> = (0..fib.q)
        .map(|i| BTreeMap::from([(i, d.clone())]))
        .collect();
    for (m, xk) in fib.generators.matrices.iter().zip(&x) {
        if xk.is_zero() {
            continue;
        }
        for (k, row) in rows.iter_mut().enumerate() {
            for &(c, v) in m.row(k) {
                *row.entry(c).or_insert_with(BigInt::zero) += xk * v;
            }
        }
    }
    for row in &mut rows {
        row.retain(|_, v| !v.is_zero());
    }

    // (d C) y = d eta with y = num / den
    let solves = |num: &[BigInt], den: &BigInt| {
        rows.iter().zip(&e).all(|(row, ek)| {
            let lhs: BigInt = row.iter().map(|(c, v)| v * &num[*c]).sum();
            lhs * &f == &d * ek * den
        })
    };
    let scale = if fib.orthogonal {
        Some(&d * &d + x.iter().map(|v| v * v).sum::<BigInt>())
    } else {
        orthogonal_scale(&rows, fib.q)
    };
    // (dC)^t (dC) = s I, so y = (dC)^t d eta / s
    if let Some(s) = scale {
        let mut num = vec![BigInt::zero(); fib.q];
        for (k, row) in rows.iter().enumerate() {
            for (c, v) in row {
                num[*c] += v * &e[k];
            }
        }
        let num: Vec<BigInt> = num.into_iter().map(|v| v * &d).collect();
        let den = &f * &s;
        if solves(&num, &den) {
            return num
                .into_iter()
                .map(|v| Rational::new(v, den.clone()))
                .collect();
        }
    }
    let dense: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| {
            (0..fib.q)
                .map(|c| Rational::from_integer(row.get(&c).cloned().unwrap_or_else(BigInt::zero)))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = eta
        .iter()
        .map(|v| v * Rational::from_integer(d.clone()))
        .collect();
    let y = QMatrix::from_rows(&dense).solve(&rhs).unwrap_or_else(|| {
        panic!("projection system is singular at xi = {xi:?}; generators are not a fibration")
    });
    let (num, den) = integer_scaling(&y);
    assert!(solves(&num, &den), "projection residual is nonzero");
    y
}

// s with (dC)^t (dC) = s I (s != 0), computed over the stored entries
fn orthogonal_scale(rows: &[BTreeMap<usize, BigInt>], q: usize) -> Option<BigInt> {
    let mut gram: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for row in rows {
        for (j, a) in row {
            for (l, b) in row {
                *gram.entry((*j, *l)).or_insert_with(BigInt::zero) += a * b;
            }
        }
    }
    let s = gram.get(&(0, 0))?.clone();
    if s.is_zero() {
        return None;
    }
    let diag_ok = (0..q).all(|j| gram.get(&(j, j)) == Some(&s));
    let off_ok = gram.iter().all(|(&(j, l), v)| j == l || v.is_zero());
    (diag_ok && off_ok).then_some(s)
}

/// Decides skewness of the fibers over `y1` and `y2` from the kernel of `A(y1 - y2)`.
pub fn check_pairwise_skew(fib: &SkewFibration, y1: &[Rational], y2: &[Rational]) -> SkewVerdict {
    if y1 == y2 {
        return SkewVerdict::SameFiber;
    }
    // kernel is unchanged by a positive rescaling of the difference
    let d = clear_denominators(&sub(y1, y2));
    let a = fib.a_matrix(&d);
    if a.full_column_rank_mod_prime() {
        return SkewVerdict::Skew;
    }
    let kernel = a.kernel();
    if kernel.is_empty() {
        SkewVerdict::Skew
    } else {
        SkewVerdict::Violation { kernel }
    }
}

/// Skewness of two arbitrary affine subspaces of the same dimension: the
/// columns of `[D1 | D2 | b2 - b1]` must be independent.
pub fn affine_skewness(f1: &FiberSpec, f2: &FiberSpec) -> SkewVerdict {
    if f1.base_coordinate == f2.base_coordinate {
        return SkewVerdict::SameFiber;
    }
    let mut cols: Vec<Vec<Rational>> = f1
        .directions
        .iter()
        .chain(&f2.directions)
        .cloned()
        .collect();
    cols.push(sub(&f2.basepoint, &f1.basepoint));
    let m = QMatrix::from_columns(&cols);
    if m.full_column_rank_mod_prime() {
        return SkewVerdict::Skew;
    }
    let kernel = m.kernel();
    if kernel.is_empty() {
        SkewVerdict::Skew
    } else {
        SkewVerdict::Violation { kernel }
    }
}

/// Intersects every fiber with `{xi_p = 0}`: generators `M_1..M_{p-1}`.
pub fn restrict(fib: &SkewFibration) -> Result<SkewFibration> {
    if fib.p == 0 {
        return Err(Error::RestrictPoints);
    }
    Ok(SkewFibration {
        p: fib.p - 1,
        q: fib.q,
        generators: fib.generators.truncate(fib.p - 1),
        orthogonal: fib.orthogonal,
    })
}

/// `A(y)^t A(y)`.
pub fn gram(fib: &SkewFibration, y: &[Rational]) -> QMatrix {
    let mut cols = fib.b_columns(y);
    cols.push(y.to_vec());
    let k = cols.len();
    let mut g = QMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = dot(&cols[i], &cols[j]);
            g[(j, i)] = v.clone();
            g[(i, j)] = v;
        }
    }
    g
}

/// `A(y)^t A(y)` with `y` a vector of indeterminates.
pub fn gram_symbolic(fib: &SkewFibration) -> Vec<Vec<Poly>> {
    let y: Vec<Poly> = (0..fib.q).map(|k| Poly::var(Var::Y(k as u32))).collect();
    let mut cols: Vec<Vec<Poly>> = fib
        .generators
        .matrices
        .iter()
        .map(|m| {
            (0..fib.q)
                .map(|k| {
                    let mut p = Poly::zero();
                    for &(c, v) in m.row(k) {
                        p.add_assign_ref(&y[c].scale(v));
                    }
                    p
                })
                .collect()
        })
        .collect();
    cols.push(y);
    cols.iter()
        .map(|ci| {
            cols.iter()
                .map(|cj| {
                    ci.iter()
                        .zip(cj)
                        .fold(Poly::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect()
        })
        .collect()
}

/// `A(y)^t A(y) = (y . y) I` coefficient by coefficient.
pub fn gram_identity_holds(fib: &SkewFibration) -> bool {
    let norm = Poly::sum_of_squares((0..fib.q).map(|k| Var::Y(k as u32)));
    gram_symbolic(fib).iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, g)| if i == j { *g == norm } else { g.is_zero() })
    })
}

/// Every invariant of a validated fibration that can be checked without sampling.
pub fn invariant_failures(fib: &SkewFibration) -> Vec<String> {
    let mut out = fib.generators.invariant_failures();
    match exists_fibration(fib.p as u64, fib.n() as u64) {
        Ok(true) => {}
        _ => out.push(format!("({}, {}) is not admissible", fib.p, fib.n())),
    }
    if !gram_identity_holds(fib) {
        out.push("Gram identity fails".into());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSampleReport {
    pub seed: u64,
    pub pairs: usize,
    pub skew: usize,
    pub same_fiber: usize,
    pub violations: usize,
}

impl PairSampleReport {
    pub fn all_skew(&self) -> bool {
        self.violations == 0 && self.skew + self.same_fiber == self.pairs
    }
}

/// Checks `count` random pairs of base points.
pub fn verify_random_pairs(
    fib: &SkewFibration,
    count: usize,
    sampler: &mut RationalSampler,
) -> PairSampleReport {
    let mut report = PairSampleReport {
        seed: sampler.seed(),
        pairs: count,
        skew: 0,
        same_fiber: 0,
        violations: 0,
    };
    for _ in 0..count {
        let y1 = sampler.vector(fib.q);
        let y2 = sampler.vector(fib.q);
        match check_pairwise_skew(fib, &y1, &y2) {
            SkewVerdict::Skew => report.skew += 1,
            SkewVerdict::SameFiber => report.same_fiber += 1,
            SkewVerdict::Violation { .. } => report.violations += 1,
        }
    }
    report
}

impl FiberSpec {
    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    /// Whether `point - basepoint` lies in the span of the directions.
    pub fn contains(&self, point: &[Rational]) -> bool {
        let offset = sub(point, &self.basepoint);
        if is_zero_vec(&offset) {
            return true;
        }
        let mut cols = self.directions.clone();
        let before = QMatrix::from_columns(&cols).rank();
        cols.push(offset);
        QMatrix::from_columns(&cols).rank() == before
    }

    /// `basepoint + sum t_i d_i`.
    pub fn point_at(&self, params: &[Rational]) -> Vec<Rational> {
        assert_eq!(params.len(), self.directions.len());
        let mut out = self.basepoint.clone();
        for (d, t) in self.directions.iter().zip(params) {
            for (o, x) in out.iter_mut().zip(d) {
                *o += x * t;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests;
