//! Fibering each fiber of a `(p1, n)`-fibration by a `(p2, p1)`-fibration.

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::{affine_skewness, fiber_through, project, FiberSpec, SkewFibration, SkewVerdict};

/// A `(p2, n)`-fibration whose fibers sit inside the fibers of `outer`.
///
/// Fibers are indexed by `(y, z)`: `y in R^{q1}` picks the outer fiber and
/// `z in R^{p1 - p2}` the inner fiber within it, transported along the
/// affine chart `xi -> (xi, B(y) xi + y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedFibration {
    outer: SkewFibration,
    inner: SkewFibration,
}

pub fn compose(outer: &SkewFibration, inner: &SkewFibration) -> Result<ComposedFibration> {
    if inner.n() != outer.p() {
        return Err(Error::DimensionMismatch(format!(
            "inner fibration lives in R^{} but outer fibers are {}-dimensional",
            inner.n(),
            outer.p()
        )));
    }
    Ok(ComposedFibration {
        outer: outer.clone(),
        inner: inner.clone(),
    })
}

impl ComposedFibration {
    pub fn p(&self) -> usize {
        self.inner.p()
    }

    pub fn n(&self) -> usize {
        self.outer.n()
    }

    /// Dimension of the parameter `(y, z)`.
    pub fn base_dim(&self) -> usize {
        self.outer.q() + self.inner.q()
    }

    pub fn outer(&self) -> &SkewFibration {
        &self.outer
    }

    pub fn inner(&self) -> &SkewFibration {
        &self.inner
    }

    fn split<'a>(&self, base: &'a [Rational]) -> (&'a [Rational], &'a [Rational]) {
        assert_eq!(
            base.len(),
            self.base_dim(),
            "base parameter must have {} entries",
            self.base_dim()
        );
        base.split_at(self.outer.q())
    }

    pub fn fiber_through(&self, base: &[Rational]) -> FiberSpec {
        let (y, z) = self.split(base);
        let local = fiber_through(&self.inner, z);
        let basepoint = self.outer.point_on_fiber(y, &local.basepoint);
        let directions = local
            .directions
            .iter()
            .map(|d| d.iter().cloned().chain(self.outer.b_apply(y, d)).collect())
            .collect();
        FiberSpec {
            basepoint,
            directions,
            base_coordinate: base.to_vec(),
        }
    }

    /// The `(y, z)` of the fiber through `point`.
    pub fn project(&self, point: &[Rational]) -> Vec<Rational> {
        let y = project(&self.outer, point);
        let z = project(&self.inner, &point[..self.outer.p()]);
        y.into_iter().chain(z).collect()
    }

    pub fn check_pairwise_skew(&self, b1: &[Rational], b2: &[Rational]) -> SkewVerdict {
        if b1 == b2 {
            return SkewVerdict::SameFiber;
        }
        affine_skewness(&self.fiber_through(b1), &self.fiber_through(b2))
    }
}
