//! Hurwitz-Radon matrix families.
//!
//! A family `A_1, ..., A_r` of `q x q` integer matrices with `A_i^t A_i = I`
//! and `A_i^t A_j + A_j^t A_i = 0` for `i != j` is the same thing as a square
//! identity of type `[r, q, q]`. [`construct_family`] produces one of the
//! maximal size `r = rho(q)` for every `q`:
//!
//! * `q = 1, 2, 4, 8`: left multiplication in the reals, complexes,
//!   quaternions and octonions;
//! * `q = 16`: one 2x2 doubling step of the octonion family;
//! * `q = 2^k`, `k >= 5`: the period-16 step `{X_a (x) I} U {Y (x) N_i}` where
//!   `X_1..X_8` are the skew generators for `q = 16`, `Y = X_1 ... X_8` and
//!   `N_i` are the skew generators for `2^(k-4)`;
//! * `q = 2^k m`, `m` odd: `m` diagonal copies of the `2^k` family.
//!
//! Every constructed member is a signed permutation matrix and the identity
//! is always the last member, so normalizing by the last member leaves the
//! skew generators unchanged.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebras::{octonion_left, quaternion_left};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::{Poly, Var};
use crate::rho::rho;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzRadonFamily {
    pub q: usize,
    pub matrices: Vec<IntMatrix>,
    pub generator: String,
}

/// Skew-symmetric, pairwise anticommuting complex structures `M_1..M_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedFamily {
    pub q: usize,
    pub matrices: Vec<IntMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// `A_i^t A_i != I`
    NotOrthogonal,
    /// `A_i^t A_j + A_j^t A_i != 0`
    NotAnticommuting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzReport {
    pub q: usize,
    pub r: usize,
    pub violations: Vec<Violation>,
}

impl HurwitzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl HurwitzRadonFamily {
    pub fn new(matrices: Vec<IntMatrix>, generator: impl Into<String>) -> Result<Self> {
        let q = matrices
            .first()
            .map(IntMatrix::rows)
            .ok_or_else(|| Error::InvalidFamily("empty family".into()))?;
        let family = Self {
            q,
            matrices,
            generator: generator.into(),
        };
        family.check_shapes()?;
        Ok(family)
    }

    pub fn r(&self) -> usize {
        self.matrices.len()
    }

    fn check_shapes(&self) -> Result<()> {
        for (i, m) in self.matrices.iter().enumerate() {
            if m.rows() != self.q || m.cols() != self.q {
                return Err(Error::DimensionMismatch(format!(
                    "member {} is {}x{}, expected {q}x{q}",
                    i + 1,
                    m.rows(),
                    m.cols(),
                    q = self.q
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = FamilyFile {
            q: self.q,
            r: self.r(),
            generator: self.generator.clone(),
            matrices: self.matrices.iter().map(IntMatrix::to_dense).collect(),
        };
        let mut s = serde_json::to_string(&file).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FamilyFile = serde_json::from_str(text)?;
        if file.matrices.len() != file.r {
            return Err(Error::Parse(format!(
                "r = {} but {} matrices given",
                file.r,
                file.matrices.len()
            )));
        }
        let matrices = file
            .matrices
            .iter()
            .map(|m| IntMatrix::from_dense(m))
            .collect::<Result<Vec<_>>>()?;
        let family = Self {
            q: file.q,
            matrices,
            generator: file.generator,
        };
        family.check_shapes()?;
        Ok(family)
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    q: usize,
    r: usize,
    generator: String,
    matrices: Vec<Vec<Vec<i64>>>,
}

fn complex_structure() -> IntMatrix {
    IntMatrix::from_dense(&[vec![0, -1], vec![1, 0]]).expect("2x2")
}

fn reflection_pair() -> IntMatrix {
    IntMatrix::from_dense(&[vec![0, 1], vec![1, 0]]).expect("2x2")
}

/// Skew generators (size `rho(2^k) - 1`) in dimension `2^k`.
fn skew_generators(k: u32) -> Vec<IntMatrix> {
    match k {
        0 => Vec::new(),
        1 => vec![complex_structure()],
        // ordered so the square identity is Euler's up to a signed permutation of the c-terms
        2 => vec![
            quaternion_left(3).neg(),
            quaternion_left(2).neg(),
            quaternion_left(1),
        ],
        3 => (1..8).map(octonion_left).collect(),
        4 => {
            let base = skew_generators(3);
            let mut out = vec![complex_structure().kron(&IntMatrix::identity(8))];
            out.extend(base.iter().map(|p| reflection_pair().kron(p)));
            out
        }
        _ => {
            let x = skew_generators(4);
            let y = x.iter().skip(1).fold(x[0].clone(), |acc, m| acc.mul(m));
            let tail = IntMatrix::identity(1 << (k - 4));
            let mut out: Vec<IntMatrix> = x.iter().map(|m| m.kron(&tail)).collect();
            out.extend(skew_generators(k - 4).iter().map(|n| y.kron(n)));
            out
        }
    }
}

fn recipe_tag(k: u32) -> String {
    match k {
        0 => "real".into(),
        1 => "complex".into(),
        2 => "quaternion".into(),
        3 => "octonion".into(),
        4 => "octonion-doubled".into(),
        _ => format!("period16({})", recipe_tag(k - 4)),
    }
}

/// A family of exactly `rho(q)` members in dimension `q`, identity last.
pub fn construct_family(q: usize) -> Result<HurwitzRadonFamily> {
    if q == 0 {
        return Err(Error::ZeroDimension);
    }
    let k = q.trailing_zeros();
    let odd = q >> k;
    let mut matrices = skew_generators(k);
    matrices.push(IntMatrix::identity(1 << k));
    let mut generator = recipe_tag(k);
    if odd > 1 {
        matrices = matrices.iter().map(|m| m.block_diag(odd)).collect();
        let _ = write!(generator, "x{odd}");
    }
    debug_assert_eq!(matrices.len() as u64, rho(q as u64).expect("q >= 1"));
    Ok(HurwitzRadonFamily {
        q,
        matrices,
        generator,
    })
}

/// Checks both clauses of the Hurwitz equations for every index pair.
pub fn verify_hurwitz_equations(family: &HurwitzRadonFamily) -> Result<HurwitzReport> {
    family.check_shapes()?;
    let ms = &family.matrices;
    let mut violations = Vec::new();
    for i in 0..ms.len() {
        if !ms[i].tr_mul(&ms[i]).is_identity() {
            violations.push(Violation {
                i,
                j: i,
                kind: ViolationKind::NotOrthogonal,
            });
        }
        for j in (i + 1)..ms.len() {
            if !ms[i].tr_mul(&ms[j]).add(&ms[j].tr_mul(&ms[i])).is_zero() {
                violations.push(Violation {
                    i,
                    j,
                    kind: ViolationKind::NotAnticommuting,
                });
            }
        }
    }
    Ok(HurwitzReport {
        q: family.q,
        r: ms.len(),
        violations,
    })
}

/// Expands `(sum a_i A_i)^t (sum a_i A_i)` with formal coefficients `a_i` and
/// compares it entrywise with `(sum a_i^2) I`.
pub fn verify_linear_combinations(family: &HurwitzRadonFamily) -> bool {
    if family.check_shapes().is_err() {
        return false;
    }
    let q = family.q;
    // rows of the formal matrix: column -> linear form in the a_i
    let mut rows: Vec<HashMap<usize, Poly>> = vec![HashMap::new(); q];
    for (i, m) in family.matrices.iter().enumerate() {
        let a = Poly::var(Var::A(i as u32));
        for (k, row) in rows.iter_mut().enumerate() {
            for &(c, v) in m.row(k) {
                row.entry(c).or_default().add_assign_ref(&a.scale(v));
            }
        }
    }
    let mut product: HashMap<(usize, usize), Poly> = HashMap::new();
    for row in &rows {
        for (&j, pj) in row {
            for (&l, pl) in row {
                product
                    .entry((j, l))
                    .or_default()
                    .add_assign_ref(&(pj * pl));
            }
        }
    }
    let norm = Poly::sum_of_squares((0..family.r()).map(|i| Var::A(i as u32)));
    let diagonal_ok = (0..q).all(|j| product.get(&(j, j)).map_or(norm.is_zero(), |p| *p == norm));
    let off_diagonal_ok = product.iter().all(|(&(j, l), p)| j == l || p.is_zero());
    diagonal_ok && off_diagonal_ok
}

/// `{A_r^t A_1, ..., A_r^t A_{r-1}}`.
pub fn normalize_last_identity(family: &HurwitzRadonFamily) -> Result<NormalizedFamily> {
    family.check_shapes()?;
    let (last, rest) = family
        .matrices
        .split_last()
        .ok_or_else(|| Error::InvalidFamily("empty family".into()))?;
    Ok(NormalizedFamily {
        q: family.q,
        matrices: rest.iter().map(|a| last.tr_mul(a)).collect(),
    })
}

impl NormalizedFamily {
    pub fn p(&self) -> usize {
        self.matrices.len()
    }

    /// The first `p` generators.
    pub fn truncate(&self, p: usize) -> NormalizedFamily {
        NormalizedFamily {
            q: self.q,
            matrices: self.matrices[..p.min(self.p())].to_vec(),
        }
    }

    /// Describes every failed invariant: skew symmetry, `M^2 = -I`, anticommutation.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, m) in self.matrices.iter().enumerate() {
            if m.rows() != self.q || m.cols() != self.q {
                out.push(format!("M{} has the wrong shape", i + 1));
                continue;
            }
            if !m.is_skew_symmetric() {
                out.push(format!("M{} is not skew-symmetric", i + 1));
            }
            if !m.mul(m).is_scalar(-1) {
                out.push(format!("M{}^2 != -I", i + 1));
            }
        }
        for i in 0..self.matrices.len() {
            for j in (i + 1)..self.matrices.len() {
                let (a, b) = (&self.matrices[i], &self.matrices[j]);
                if a.rows() == b.rows() && !a.mul(b).add(&b.mul(a)).is_zero() {
                    out.push(format!("M{} and M{} do not anticommute", i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn satisfies_invariants(&self) -> bool {
        self.invariant_failures().is_empty()
    }
}
