//! Maximal Hurwitz-Radon families, their exact verification and normal form.
//!
//! ```text
//! cargo run --example hurwitz_families -- 16
//! ```

use skewfib::{
    construct_family, normalize_last_identity, verify_hurwitz_equations, verify_linear_combinations,
};

fn main() -> skewfib::Result<()> {
    let q: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);

    for q in [1, 2, 4, 8, 16, 24, 32, 64] {
        let family = construct_family(q)?;
        let report = verify_hurwitz_equations(&family)?;
        println!(
            "q={q:<3} r={:<2} {:<22} hurwitz={} linear={}",
            family.r(),
            family.generator,
            report.passed(),
            verify_linear_combinations(&family)
        );
    }

    let normalized = normalize_last_identity(&construct_family(q)?)?;
    println!(
        "\nnormalized family for q={q}: {} complex structures",
        normalized.p()
    );
    for (i, m) in normalized.matrices.iter().enumerate() {
        println!(
            "M{}: skew={} square=-I:{}",
            i + 1,
            m.is_skew_symmetric(),
            m.mul(m).neg().is_identity()
        );
    }
    if q <= 8 {
        println!("\n{}", construct_family(q)?.to_json());
    }
    Ok(())
}
