//! The kernel test for skewness on a degenerate family. A symmetric
//! generator does not fiber R^3: fibers over points differing by an
//! eigenvector meet or run parallel, and the kernel names the relation.
//!
//! ```text
//! cargo run --example skewness_oracle
//! ```

use skewfib::linalg::{format_vec, int};
use skewfib::{check_pairwise_skew, IntMatrix, SkewFibration, SkewVerdict};

fn main() -> skewfib::Result<()> {
    let swap = IntMatrix::from_dense(&[vec![0, 1], vec![1, 0]])?;
    let fib = SkewFibration::from_generators_unchecked(2, vec![swap]);
    let pairs = [
        ([1, 0], [0, 1]),
        ([1, 1], [0, 0]),
        ([1, 0], [0, 0]),
        ([3, 1], [1, 2]),
    ];
    for (a, b) in pairs {
        let y1: Vec<_> = a.iter().map(|&v| int(v)).collect();
        let y2: Vec<_> = b.iter().map(|&v| int(v)).collect();
        let verdict = match check_pairwise_skew(&fib, &y1, &y2) {
            SkewVerdict::Skew => "skew".to_owned(),
            SkewVerdict::SameFiber => "same fiber".to_owned(),
            SkewVerdict::Violation { kernel } => {
                format!("not skew, kernel {}", format_vec(&kernel[0]))
            }
        };
        println!(
            "fibers over {} and {}: {verdict}",
            format_vec(&y1),
            format_vec(&y2)
        );
    }
    Ok(())
}
