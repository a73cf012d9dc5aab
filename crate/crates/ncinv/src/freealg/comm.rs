//! Commutative polynomials in auxiliary indeterminates.
//!
//! These carry the coordinates of generic elements during identity testing
//! in finite-dimensional algebras: a generic element has coordinates
//! `t_0, t_1, ...` and products of generic elements have [`CommPoly`]
//! coordinates. Vanishing of all coordinates is the identity test.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rat::{rat_int, Rat};

/// A commutative monomial: a multiset of indeterminate indices, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct CommMono(Vec<u32>);

impl CommMono {
    pub fn one() -> Self {
        CommMono(Vec::new())
    }

    pub fn var(i: u32) -> Self {
        CommMono(vec![i])
    }

    pub fn mul(&self, other: &CommMono) -> CommMono {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        v.push(x);
                        a.next();
                    } else {
                        v.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    v.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    v.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        CommMono(v)
    }
}

/// Finitely supported map from commutative monomials to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CommPoly {
    terms: BTreeMap<CommMono, Rat>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = CommPoly::zero();
        p.add_term(CommMono::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(rat_int(1))
    }

    pub fn var(i: u32) -> Self {
        let mut p = CommPoly::zero();
        p.add_term(CommMono::var(i), rat_int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: CommMono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &CommPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &CommPoly, s: &Rat) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone() * s);
        }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> CommPoly {
        let mut out = CommPoly::zero();
        out.add_scaled(self, s);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn exponent_vectors_add_under_multiplication() {
        let t0 = CommPoly::var(0);
        let t1 = CommPoly::var(1);
        let p = t0.mul(&t1).mul(&t0); // t0^2 t1
        assert_eq!(p.num_terms(), 1);
        let (m, c) = p.terms.iter().next().unwrap();
        assert_eq!(m, &CommMono(vec![0, 0, 1]));
        assert_eq!(c, &rat_int(1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let t0 = CommPoly::var(0);
        let mut p = t0.scale(&rat(2, 3));
        p.add_scaled(&t0, &rat(-2, 3));
        assert!(p.is_zero());
    }
}
