//! The (1,3) fibration of R^3 by skew lines: fibers over circles of base
//! points rule nested hyperboloids. Writes CSV to stdout.
//!
//! ```text
//! cargo run --example hopf_lines > lines.csv
//! ```

use skewfib::fibration::{circle_base_points, export_fiber_samples, samples_to_csv};
use skewfib::linalg::{format_vec, int, rat};
use skewfib::{build_fibration, check_pairwise_skew, project};

fn main() -> skewfib::Result<()> {
    let fib = build_fibration(1, 3)?;
    let mut bases = Vec::new();
    for radius in [rat(1, 2), int(1), int(2)] {
        bases.extend(circle_base_points(&radius, 16));
    }

    // fibers over one circle stay pairwise skew and lie on x2^2 + x3^2 - c^2 x1^2 = c^2
    let circle = circle_base_points(&int(1), 16);
    let skew = circle
        .iter()
        .zip(circle.iter().skip(1))
        .all(|(a, b)| check_pairwise_skew(&fib, a, b).is_skew());
    eprintln!("neighbouring fibers over the unit circle skew: {skew}");
    let point = fib.point_on_fiber(&circle[3], &[rat(3, 2)]);
    eprintln!(
        "point {} projects to {}",
        format_vec(&point),
        format_vec(&project(&fib, &point))
    );

    let samples = export_fiber_samples(&fib, &bases, (&int(-2), &int(2)), 2);
    print!("{}", samples_to_csv(&samples, fib.n()));
    Ok(())
}
