//! Square identities `(a_1^2+...+a_r^2)(b_1^2+...+b_s^2) = c_1^2+...+c_q^2`
//! with bilinear `c_k`, verified by full symbolic expansion.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hrfamily::HurwitzRadonFamily;
use crate::poly::{Monomial, Poly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareIdentity {
    pub r: usize,
    pub s: usize,
    pub q: usize,
    pub forms: Vec<Poly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    /// The expansion of `lhs - rhs` left this many nonzero terms.
    Fails {
        residual_terms: usize,
    },
    /// Form `c_{form+1}` has a monomial that is not `a_i b_j`, or uses an
    /// out-of-range variable.
    NotBilinear {
        form: usize,
    },
}

impl IdentityCheck {
    pub fn holds(self) -> bool {
        self == IdentityCheck::Holds
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct JsonTerm {
    a: usize,
    b: usize,
    coef: i64,
}

#[derive(Serialize, Deserialize)]
struct IdentityFile {
    r: usize,
    s: usize,
    q: usize,
    c: Vec<Vec<JsonTerm>>,
}

fn ab(i: usize, j: usize) -> Monomial {
    Monomial::var(Var::A(i as u32)).mul(&Monomial::var(Var::B(j as u32)))
}

impl SquareIdentity {
    /// Builds forms from `(coef, a, b)` triples with 1-based indices.
    pub fn from_terms(r: usize, s: usize, forms: &[&[(i64, usize, usize)]]) -> Self {
        let forms = forms
            .iter()
            .map(|terms| {
                let mut p = Poly::zero();
                for &(coef, a, b) in terms.iter() {
                    assert!(a >= 1 && b >= 1, "indices are 1-based");
                    p.add_term(coef, ab(a - 1, b - 1));
                }
                p
            })
            .collect::<Vec<_>>();
        Self {
            r,
            s,
            q: forms.len(),
            forms,
        }
    }

    /// `a_i b_j` coefficient pairs of form `k`, or `None` if it is not bilinear.
    fn bilinear_terms(&self, k: usize) -> Option<Vec<(usize, usize, i64)>> {
        self.forms[k]
            .terms()
            .map(|(m, c)| match m.powers() {
                [(Var::A(i), 1), (Var::B(j), 1)]
                    if (*i as usize) < self.r && (*j as usize) < self.s =>
                {
                    Some((*i as usize, *j as usize, c))
                }
                _ => None,
            })
            .collect()
    }

    /// A signed permutation taking `self`'s forms onto `other`'s:
    /// entry `k` is `(l, sign)` with `c_k = sign * other.c_l`.
    pub fn signed_permutation_to(&self, other: &SquareIdentity) -> Option<Vec<(usize, i64)>> {
        if (self.r, self.s, self.q) != (other.r, other.s, other.q) {
            return None;
        }
        let mut used = vec![false; other.q];
        let mut map = Vec::with_capacity(self.q);
        for c in &self.forms {
            let hit = other.forms.iter().enumerate().find_map(|(l, d)| {
                if used[l] {
                    None
                } else if c == d {
                    Some((l, 1))
                } else if *c == -d.clone() {
                    Some((l, -1))
                } else {
                    None
                }
            })?;
            used[hit.0] = true;
            map.push(hit);
        }
        Some(map)
    }

    /// One squared term per line, as an identity is usually displayed.
    pub fn pretty(&self) -> String {
        let squares = |prefix: &str, n: usize| {
            (1..=n)
                .map(|i| format!("{prefix}{i}^2"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let mut out = format!("({}) ({})\n", squares("a", self.r), squares("b", self.s));
        for (k, c) in self.forms.iter().enumerate() {
            let lead = if k == 0 { "=" } else { "+" };
            let _ = writeln!(out, "  {lead} ({c})^2");
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let c = (0..self.q)
            .map(|k| {
                self.bilinear_terms(k)
                    .map(|ts| {
                        ts.into_iter()
                            .map(|(a, b, coef)| JsonTerm {
                                a: a + 1,
                                b: b + 1,
                                coef,
                            })
                            .collect()
                    })
                    .ok_or_else(|| Error::Parse(format!("form c{} is not bilinear", k + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let file = IdentityFile {
            r: self.r,
            s: self.s,
            q: self.q,
            c,
        };
        let mut s = serde_json::to_string(&file)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdentityFile = serde_json::from_str(text)?;
        if file.c.len() != file.q {
            return Err(Error::Parse(format!(
                "q = {} but {} forms given",
                file.q,
                file.c.len()
            )));
        }
        let forms = file
            .c
            .iter()
            .map(|terms| {
                let mut p = Poly::zero();
                for t in terms {
                    if t.a == 0 || t.b == 0 || t.a > file.r || t.b > file.s {
                        return Err(Error::Parse(format!("term a{} b{} out of range", t.a, t.b)));
                    }
                    p.add_term(t.coef, ab(t.a - 1, t.b - 1));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            r: file.r,
            s: file.s,
            q: file.q,
            forms,
        })
    }
}

/// The `[r, q, q]` identity with `c = (a_1 A_1 + ... + a_r A_r) b`.
pub fn identity_from_family(family: &HurwitzRadonFamily) -> SquareIdentity {
    let q = family.q;
    let mut forms = vec![Poly::zero(); q];
    for (i, m) in family.matrices.iter().enumerate() {
        for (k, form) in forms.iter_mut().enumerate() {
            for &(j, v) in m.row(k) {
                form.add_term(v, ab(i, j));
            }
        }
    }
    SquareIdentity {
        r: family.r(),
        s: q,
        q,
        forms,
    }
}

/// Expands both sides and compares them coefficient by coefficient.
pub fn verify_identity(identity: &SquareIdentity) -> IdentityCheck {
    if identity.forms.len() != identity.q {
        return IdentityCheck::NotBilinear {
            form: identity.forms.len().min(identity.q),
        };
    }
    if let Some(form) = (0..identity.q).find(|&k| identity.bilinear_terms(k).is_none()) {
        return IdentityCheck::NotBilinear { form };
    }
    let a_norm = Poly::sum_of_squares((0..identity.r).map(|i| Var::A(i as u32)));
    let b_norm = Poly::sum_of_squares((0..identity.s).map(|j| Var::B(j as u32)));
    let mut residual = &a_norm * &b_norm;
    for c in &identity.forms {
        residual.add_assign_ref(&c.square().scale(-1));
    }
    if residual.is_zero() {
        IdentityCheck::Holds
    } else {
        IdentityCheck::Fails {
            residual_terms: residual.len(),
        }
    }
}

/// Euler's four-square identity, term for term as it is usually printed.
pub fn euler_four_square() -> SquareIdentity {
    SquareIdentity::from_terms(
        4,
        4,
        &[
            &[(1, 1, 1), (-1, 2, 2), (-1, 3, 3), (-1, 4, 4)],
            &[(1, 1, 2), (1, 2, 1), (1, 3, 4), (-1, 4, 3)],
            &[(1, 1, 3), (1, 3, 1), (-1, 2, 4), (1, 4, 2)],
            &[(1, 1, 4), (1, 4, 1), (1, 2, 3), (-1, 3, 2)],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hrfamily::construct_family;
    use crate::matrix::IntMatrix;

    #[test]
    fn one_square() {
        let id = identity_from_family(&construct_family(1).unwrap());
        assert_eq!(id.forms, vec![Poly::term(1, ab(0, 0))]);
        assert!(verify_identity(&id).holds());
    }

    #[test]
    fn two_squares_from_hand_family() {
        let j = IntMatrix::from_dense(&[vec![0, -1], vec![1, 0]]).unwrap();
        let f = HurwitzRadonFamily::new(vec![IntMatrix::identity(2), j], "hand").unwrap();
        let id = identity_from_family(&f);
        let expect =
            SquareIdentity::from_terms(2, 2, &[&[(1, 1, 1), (-1, 2, 2)], &[(1, 1, 2), (1, 2, 1)]]);
        assert_eq!(id, expect);
        assert!(verify_identity(&id).holds());
    }

    #[test]
    fn euler_verbatim_holds_and_perturbation_fails() {
        let e = euler_four_square();
        assert!(verify_identity(&e).holds());
        let mut bad = e.clone();
        bad.forms[2] = bad.forms[2].clone() - Poly::term(2, ab(3, 1));
        assert!(matches!(verify_identity(&bad), IdentityCheck::Fails { .. }));
    }

    #[test]
    fn quaternion_family_is_euler_up_to_signed_permutation() {
        let id = identity_from_family(&construct_family(4).unwrap());
        assert!(verify_identity(&id).holds());
        let map = id
            .signed_permutation_to(&euler_four_square())
            .expect("signed permutation");
        // frozen convention: Euler's forms are L_k applied to ours
        assert_eq!(map, vec![(3, 1), (2, 1), (1, -1), (0, -1)]);
    }

    #[test]
    fn non_bilinear_is_distinct_failure() {
        let mut e = euler_four_square();
        e.forms[1].add_term(1, Monomial::var(Var::A(0)));
        assert_eq!(verify_identity(&e), IdentityCheck::NotBilinear { form: 1 });
        let mut e = euler_four_square();
        e.forms[0].add_term(1, ab(5, 0));
        assert_eq!(verify_identity(&e), IdentityCheck::NotBilinear { form: 0 });
    }

    #[test]
    fn bigger_families() {
        for q in [8, 16, 64] {
            let id = identity_from_family(&construct_family(q).unwrap());
            assert!(verify_identity(&id).holds(), "q={q}");
            assert!(id.forms.iter().all(|c| c.len() <= id.r));
        }
    }

    #[test]
    fn pretty_and_json() {
        let e = euler_four_square();
        let text = e.pretty();
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "  = (a1b1 - a2b2 - a3b3 - a4b4)^2"
        );
        assert_eq!(text.lines().count(), 5);
        let json = e.to_json().unwrap();
        assert!(json.starts_with(r#"{"r":4,"s":4,"q":4,"c":[[{"a":1,"b":1,"coef":1}"#));
        assert_eq!(SquareIdentity::from_json(&json).unwrap(), e);
    }
}
