//! Bilinear sum-of-squares identities read off Hurwitz-Radon families.
//!
//! ```text
//! cargo run --example square_identities
//! ```

use skewfib::squares::euler_four_square;
use skewfib::{construct_family, identity_from_family, verify_identity};

fn main() -> skewfib::Result<()> {
    let euler = euler_four_square();
    println!("Euler's four-square identity:\n{}", euler.pretty());
    println!("holds: {}\n", verify_identity(&euler).holds());

    let quaternion = identity_from_family(&construct_family(4)?);
    println!(
        "identity from the quaternion family:\n{}",
        quaternion.pretty()
    );
    match quaternion.signed_permutation_to(&euler) {
        Some(map) => println!("equals Euler's after the signed permutation {map:?}\n"),
        None => println!("not a signed permutation of Euler's\n"),
    }

    for q in [1, 2, 8, 16, 64] {
        let id = identity_from_family(&construct_family(q)?);
        println!(
            "[{}, {}, {}] identity verified: {}",
            id.r,
            id.s,
            id.q,
            verify_identity(&id).holds()
        );
    }
    Ok(())
}
