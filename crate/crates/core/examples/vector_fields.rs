//! Linearly independent tangent vector fields on spheres.
//!
//! ```text
//! cargo run --example vector_fields -- 16
//! ```

use skewfib::sampling::RationalSampler;
use skewfib::{check_independence, tangent_fields};

fn main() -> skewfib::Result<()> {
    let q: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);
    let set = tangent_fields(q)?;
    println!(
        "S^{} carries {} independent tangent fields",
        q - 1,
        set.fields.len()
    );
    println!(
        "tangent: {}  orthonormal frame (symbolic): {}",
        set.tangency_holds(),
        set.gram_identity_holds()
    );

    let mut sampler = RationalSampler::new(1);
    let points: Vec<_> = (0..200).map(|_| sampler.nonzero_vector(q)).collect();
    let report = check_independence(&set, &points)?;
    println!(
        "{} rational points: tangent failures {}, rank failures {}",
        report.points, report.tangent_failures, report.rank_failures
    );
    for q in [2, 4, 8, 12, 32, 64] {
        println!("q={q:<3} fields={}", tangent_fields(q)?.fields.len());
    }
    Ok(())
}
