//! Floating-point samples along fibers, for plotting.

use std::fmt::Write as _;

use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::{int, rat, rational_pair, Rational};

use super::{fiber_through, SkewFibration};

#[derive(Debug, Clone, PartialEq)]
pub struct FiberSample {
    pub fiber_id: usize,
    pub base: Vec<Rational>,
    pub point: Vec<f64>,
}

/// `count` rational points on the circle of the given radius, spread by
/// angle, via `t -> ((1 - t^2), 2t) / (1 + t^2)` with `t` close to
/// `tan(theta / 2)` at denominator 1000.
pub fn circle_base_points(radius: &Rational, count: usize) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|j| {
            if 2 * j == count {
                return vec![-radius.clone(), Rational::zero()];
            }
            let half_angle = std::f64::consts::PI * j as f64 / count as f64;
            let t = rat((half_angle.tan() * 1000.0).round() as i64, 1000);
            let denom = Rational::one() + &t * &t;
            let x = (Rational::one() - &t * &t) / &denom;
            let y = (int(2) * &t) / &denom;
            vec![x * radius, y * radius]
        })
        .collect()
}

/// Points `point_on_fiber(y, xi)` with `xi` on a grid over `range` in every
/// fiber coordinate, `samples_per_fiber` values per axis.
pub fn export_fiber_samples(
    fib: &SkewFibration,
    base_points: &[Vec<Rational>],
    range: (&Rational, &Rational),
    samples_per_fiber: usize,
) -> Vec<FiberSample> {
    let (lo, hi) = range;
    let ticks: Vec<Rational> = match samples_per_fiber {
        0 => Vec::new(),
        1 => vec![lo.clone()],
        k => (0..k)
            .map(|i| lo + (hi - lo) * Rational::new(i.into(), (k - 1).into()))
            .collect(),
    };
    let mut out = Vec::new();
    for (fiber_id, y) in base_points.iter().enumerate() {
        let fiber = fiber_through(fib, y);
        for params in grid(&ticks, fib.p()) {
            let exact = fiber.point_at(&params);
            let point = exact.iter().map(|x| x.to_f64().expect("finite")).collect();
            out.push(FiberSample {
                fiber_id,
                base: y.clone(),
                point,
            });
        }
    }
    out
}

fn grid(ticks: &[Rational], dim: usize) -> Vec<Vec<Rational>> {
    let mut acc = vec![Vec::new()];
    for _ in 0..dim {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                ticks.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    acc
}

/// `fiber_id,x1,...,xn` with a header row.
pub fn samples_to_csv(samples: &[FiberSample], n: usize) -> String {
    let mut out = String::from("fiber_id");
    for i in 1..=n {
        let _ = write!(out, ",x{i}");
    }
    out.push('\n');
    for s in samples {
        let _ = write!(out, "{}", s.fiber_id);
        for x in &s.point {
            let _ = write!(out, ",{x}");
        }
        out.push('\n');
    }
    out
}

/// One JSON object per line; the base point is exact.
pub fn samples_to_jsonl(samples: &[FiberSample]) -> String {
    let mut out = String::new();
    for s in samples {
        let line = serde_json::json!({
            "fiber_id": s.fiber_id,
            "base": s.base.iter().map(rational_pair).collect::<Vec<_>>(),
            "point": s.point,
        });
        let _ = writeln!(out, "{line}");
    }
    out
}
