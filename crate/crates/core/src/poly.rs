//! Sparse multivariate integer polynomials.
//!
//! Terms live in a `BTreeMap` keyed by monomial, so iteration order is the
//! canonical lexicographic order on `(variable family, index, exponent)` and
//! two polynomials are equal iff their maps are equal.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Variable families: `a_i` and `b_j` of a square identity, `y_k` of a base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A(u32),
    B(u32),
    Y(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, as written by hand
        match self {
            Var::A(i) => write!(f, "a{}", i + 1),
            Var::B(i) => write!(f, "b{}", i + 1),
            Var::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

/// Product of variable powers, sorted by variable, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Total degree in the variables accepted by `pick`.
    pub fn degree_in(&self, pick: impl Fn(Var) -> bool) -> u32 {
        self.0
            .iter()
            .filter(|&&(v, _)| pick(v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &(v, e) in &self.0 {
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term(coef: i64, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(coef, mono);
        p
    }

    /// `sum_i v_i^2` over the given variables.
    pub fn sum_of_squares(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut p = Self::zero();
        for v in vars {
            p.add_term(1, Monomial(vec![(v, 2)]));
        }
        p
    }

    pub fn add_term(&mut self, coef: i64, mono: Monomial) {
        if coef == 0 {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coef);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, mono: &Monomial) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in other.terms() {
            self.add_term(c, m.clone());
        }
    }

    pub fn mul_ref(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }

    pub fn square(&self) -> Poly {
        self.mul_ref(self)
    }

    pub fn scale(&self, s: i64) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(c * s, m.clone());
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.add_assign_ref(&rhs.scale(-1));
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_ref(rhs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if abs != 1 || m.powers().is_empty() {
                write!(f, "{abs}")?;
            }
            if !m.powers().is_empty() {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let x = Poly::var(Var::A(0));
        let y = Poly::var(Var::B(0));
        let s = (x.clone() + y.clone()).square();
        let expect = x.square() + y.square() + (&x * &y).scale(2);
        assert_eq!(s, expect);
        // exponent vectors compare lexicographically: a1b1 < a1^2
        assert_eq!(s.to_string(), "2a1b1 + a1^2 + b1^2");
    }

    #[test]
    fn cancellation_leaves_zero() {
        let x = Poly::var(Var::Y(3));
        assert!((x.clone() - x).is_zero());
        let d = (Poly::var(Var::A(0)) + Poly::constant(1)) - Poly::constant(1);
        assert_eq!(d, Poly::var(Var::A(0)));
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn monomial_order_and_degree() {
        let m = Monomial::var(Var::B(1))
            .mul(&Monomial::var(Var::A(2)))
            .mul(&Monomial::var(Var::A(2)));
        assert_eq!(m.powers(), &[(Var::A(2), 2), (Var::B(1), 1)]);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.degree_in(|v| matches!(v, Var::A(_))), 2);
    }
}
