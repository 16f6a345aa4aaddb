//! Frozen multiplication tables of the quaternions and octonions.
//!
//! Basis vectors are numbered `0` (the unit) through `dim - 1`. Imaginary
//! units square to `-1`, and each listed triple `(a, b, c)` means
//! `e_a e_b = e_c`, `e_b e_c = e_a`, `e_c e_a = e_b`, with the reversed
//! products negated.

use crate::matrix::IntMatrix;

pub const QUATERNION_TRIPLES: [(usize, usize, usize); 1] = [(1, 2, 3)];

/// `e_i e_{i+1} = e_{i+3}`, indices taken mod 7 in `1..=7`.
pub const OCTONION_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 7),
    (5, 6, 1),
    (6, 7, 2),
    (7, 1, 3),
];

/// `e_a e_b = sign * e_index`.
pub fn basis_product(triples: &[(usize, usize, usize)], a: usize, b: usize) -> (i64, usize) {
    match (a, b) {
        (0, b) => (1, b),
        (a, 0) => (1, a),
        (a, b) if a == b => (-1, 0),
        _ => {
            for &(x, y, z) in triples {
                for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    if (a, b) == (p, q) {
                        return (1, r);
                    }
                    if (a, b) == (q, p) {
                        return (-1, r);
                    }
                }
            }
            panic!("no product for e{a} e{b} in table");
        }
    }
}

/// Matrix of `x -> e_a x` on `R^dim`.
pub fn left_multiplication(triples: &[(usize, usize, usize)], dim: usize, a: usize) -> IntMatrix {
    let mut image = vec![(0, 0); dim];
    for b in 0..dim {
        let (sign, c) = basis_product(triples, a, b);
        // column b has its entry in row c
        image[c] = (b, sign);
    }
    IntMatrix::signed_permutation(&image)
}

pub fn quaternion_left(a: usize) -> IntMatrix {
    left_multiplication(&QUATERNION_TRIPLES, 4, a)
}

pub fn octonion_left(a: usize) -> IntMatrix {
    left_multiplication(&OCTONION_TRIPLES, 8, a)
}
