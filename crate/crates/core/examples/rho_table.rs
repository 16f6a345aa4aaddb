//! Hurwitz-Radon numbers and the table of admissible fiber dimensions.
//!
//! ```text
//! cargo run --example rho_table -- 40
//! ```

use skewfib::rho::RhoDecomposition;
use skewfib::{generate_table, rho};

fn main() -> skewfib::Result<()> {
    let n_max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);

    println!("q = 2^k (2m+1)\tk\tm\trho(q)");
    for q in [1, 2, 3, 4, 8, 12, 16, 32, 64, 96, 128] {
        let d = RhoDecomposition::new(q)?;
        println!("{q:<13}\t{}\t{}\t{}", d.k, d.m, d.rho);
    }
    assert_eq!(rho(16)?, 9);

    let table = generate_table(n_max)?;
    println!("\nadmissible p for n <= {n_max} (dominant marked *, doubly dominant **)");
    for (n, row) in &table.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|e| {
                let mark = if e.doubly_dominant {
                    "**"
                } else if e.dominant {
                    "*"
                } else {
                    ""
                };
                format!("{}{mark}", e.p)
            })
            .collect();
        println!("{n:>4}  {}", cells.join(" "));
    }
    Ok(())
}
