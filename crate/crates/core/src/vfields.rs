//! Linear tangent vector fields on spheres.
//!
//! The skew generators `B_1..B_{r-1}` of a normalized Hurwitz-Radon family
//! give fields `y -> B_i y` on `S^{q-1}`; with `y` they form an orthogonal
//! frame of equal lengths at every point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hrfamily::{construct_family, normalize_last_identity};
use crate::linalg::{dot, is_zero_vec, QMatrix, Rational};
use crate::matrix::IntMatrix;
use crate::poly::{Poly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentFieldSet {
    pub q: usize,
    pub fields: Vec<IntMatrix>,
}

pub fn tangent_fields(q: usize) -> Result<TangentFieldSet> {
    let normalized = normalize_last_identity(&construct_family(q)?)?;
    Ok(TangentFieldSet {
        q,
        fields: normalized.matrices,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub tangent: bool,
    pub rank: usize,
    /// Gram matrix of `{B_i y} U {y}` equals `(y . y) I`.
    pub orthogonal_frame: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub fields: usize,
    pub points: usize,
    pub tangent_failures: usize,
    pub rank_failures: usize,
    pub frame_failures: usize,
}

impl IndependenceReport {
    /// Tangent and independent everywhere sampled.
    pub fn passed(&self) -> bool {
        self.tangent_failures == 0 && self.rank_failures == 0
    }
}

impl TangentFieldSet {
    pub fn values_at(&self, y: &[Rational]) -> Vec<Vec<Rational>> {
        self.fields.iter().map(|b| b.mul_vec(y)).collect()
    }

    pub fn check_point(&self, y: &[Rational]) -> Result<PointCheck> {
        if y.len() != self.q {
            return Err(Error::DimensionMismatch(format!(
                "point has {} entries, expected {}",
                y.len(),
                self.q
            )));
        }
        if is_zero_vec(y) {
            return Err(Error::Parse(
                "tangent fields are checked at nonzero points only".into(),
            ));
        }
        let values = self.values_at(y);
        let tangent = values
            .iter()
            .all(|v| dot(v, y) == Rational::from_integer(0.into()));
        let rank = if values.is_empty() {
            0
        } else {
            QMatrix::from_columns(&values).rank()
        };
        let mut frame = values;
        frame.push(y.to_vec());
        let norm = dot(y, y);
        let orthogonal_frame = (0..frame.len()).all(|i| {
            (i..frame.len()).all(|j| {
                let g = dot(&frame[i], &frame[j]);
                if i == j {
                    g == norm
                } else {
                    g == Rational::from_integer(0.into())
                }
            })
        });
        Ok(PointCheck {
            tangent,
            rank,
            orthogonal_frame,
        })
    }

    /// Gram matrix of `{B_i y} U {y}` equals `(y . y) I` as polynomials in `y`.
    pub fn gram_identity_holds(&self) -> bool {
        let y: Vec<Poly> = (0..self.q).map(|k| Poly::var(Var::Y(k as u32))).collect();
        let mut cols: Vec<Vec<Poly>> = self
            .fields
            .iter()
            .map(|b| {
                (0..self.q)
                    .map(|k| {
                        let mut p = Poly::zero();
                        for &(c, v) in b.row(k) {
                            p.add_assign_ref(&y[c].scale(v));
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        cols.push(y);
        let norm = Poly::sum_of_squares((0..self.q).map(|k| Var::Y(k as u32)));
        (0..cols.len()).all(|i| {
            (i..cols.len()).all(|j| {
                let g = cols[i]
                    .iter()
                    .zip(&cols[j])
                    .fold(Poly::zero(), |acc, (a, b)| acc + a * b);
                if i == j {
                    g == norm
                } else {
                    g.is_zero()
                }
            })
        })
    }

    /// `y . B y = 0` identically, i.e. every `B` is skew-symmetric.
    pub fn tangency_holds(&self) -> bool {
        self.fields.iter().all(IntMatrix::is_skew_symmetric)
    }

    pub fn to_json(&self) -> String {
        let dense: Vec<Vec<Vec<i64>>> = self.fields.iter().map(IntMatrix::to_dense).collect();
        let mut s = serde_json::to_string(&dense).expect("plain data");
        s.push('\n');
        s
    }
}

pub fn check_independence(
    fieldset: &TangentFieldSet,
    points: &[Vec<Rational>],
) -> Result<IndependenceReport> {
    let mut report = IndependenceReport {
        fields: fieldset.fields.len(),
        points: points.len(),
        tangent_failures: 0,
        rank_failures: 0,
        frame_failures: 0,
    };
    for y in points {
        let c = fieldset.check_point(y)?;
        report.tangent_failures += usize::from(!c.tangent);
        report.rank_failures += usize::from(c.rank != fieldset.fields.len());
        report.frame_failures += usize::from(!c.orthogonal_frame);
    }
    Ok(report)
}
