//! Skew fibrations from normalized families, pairwise checks, projection,
//! composition and restriction.
//!
//! ```text
//! cargo run --example fibration_composition
//! ```

use skewfib::fibration::{gram_identity_holds, verify_random_pairs};
use skewfib::linalg::format_vec;
use skewfib::sampling::RationalSampler;
use skewfib::{build_fibration, compose, project, restrict};

fn main() -> skewfib::Result<()> {
    let mut sampler = RationalSampler::new(2024);

    for (p, n) in [(1, 3), (3, 7), (7, 15), (8, 24), (9, 41)] {
        let fib = build_fibration(p, n)?;
        let report = verify_random_pairs(&fib, 100, &mut sampler);
        println!(
            "({p},{n}) gram={} pairs skew={}/{}",
            gram_identity_holds(&fib),
            report.skew,
            report.pairs
        );
    }
    match build_fibration(2, 5) {
        Ok(_) => println!("(2,5) unexpectedly built"),
        Err(e) => println!("(2,5): {e}"),
    }

    let fib = build_fibration(3, 7)?;
    let point = sampler.vector(7);
    println!(
        "\nfiber of (3,7) through {} lies over {}",
        format_vec(&point),
        format_vec(&project(&fib, &point))
    );

    let outer = build_fibration(7, 15)?;
    let inner = build_fibration(3, 7)?;
    let composed = compose(&outer, &inner)?;
    let skew = (0..50)
        .filter(|_| {
            let b1 = sampler.vector(composed.base_dim());
            let b2 = sampler.vector(composed.base_dim());
            composed.check_pairwise_skew(&b1, &b2).is_skew()
        })
        .count();
    println!(
        "({},{}) by composition: {skew}/50 sampled pairs skew",
        composed.p(),
        composed.n()
    );

    let mut fib = outer;
    let mut chain = vec![format!("({},{})", fib.p(), fib.n())];
    while fib.p() > 1 {
        fib = restrict(&fib)?;
        chain.push(format!("({},{})", fib.p(), fib.n()));
    }
    println!("restriction chain {}", chain.join(" -> "));
    Ok(())
}
