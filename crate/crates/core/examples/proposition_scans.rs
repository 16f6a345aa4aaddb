//! Exhaustive checks of the consequences of the existence criterion.
//!
//! ```text
//! cargo run --example proposition_scans -- 1024
//! ```

use skewfib::{fiber_dims, scan_propositions};

fn main() -> skewfib::Result<()> {
    let n_max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(512);
    let report = scan_propositions(n_max)?;
    print!("{}", report.render());
    for n in [48, 80, 96] {
        println!("dims({n}) = {:?}", fiber_dims(n)?);
    }
    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
