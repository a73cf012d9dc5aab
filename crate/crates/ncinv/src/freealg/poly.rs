//! Noncommutative polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::word::{MultiDeg, Word};
use super::FreeAlgError;
use crate::combinat::signed_permutations;
use crate::rat::{rat_int, Rat};

/// An element of the free associative algebra over the rationals: a finitely
/// supported map from [`Word`]s to nonzero coefficients.
///
/// The term map never stores a zero coefficient, so equality of polynomials
/// is equality of the maps.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rat>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The unit polynomial `1` (the empty word).
    pub fn one() -> Self {
        Self::monomial(Word::one(), rat_int(1))
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: u16) -> Self {
        Self::monomial(Word::var(i), rat_int(1))
    }

    /// A single term `coeff * word`; collapses to zero if `coeff == 0`.
    pub fn monomial(word: Word, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(Word::one(), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rat)>>(iter: I) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    /// Terms in decreasing deglex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Word::one())
    }

    /// The greatest word under deglex, with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Rat)> {
        self.terms.iter().next_back()
    }

    /// The greatest term strictly below `bound`, or the leading term when
    /// `bound` is `None`.
    pub fn largest_term_below(&self, bound: Option<&Word>) -> Option<(&Word, &Rat)> {
        use std::ops::Bound;
        match bound {
            None => self.terms.iter().next_back(),
            Some(b) => self
                .terms
                .range((Bound::Unbounded, Bound::Excluded(b)))
                .next_back(),
        }
    }

    /// Total degree (degree of the leading word), `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.degree()).max()
    }

    /// Largest variable index occurring in any term.
    pub fn max_variable(&self) -> u16 {
        self.terms.keys().map(|w| w.max_letter()).max().unwrap_or(0)
    }

    /// True if every term has the same degree `n`.
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == n)
    }

    /// True if no variable occurs twice in any term.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|w| {
            let mut seen = std::collections::HashSet::new();
            w.letters().iter().all(|l| seen.insert(*l))
        })
    }

    /// Add `coeff * word` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NcPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone() * scale);
        }
    }

    pub fn scale(&self, s: &Rat) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * s))
                .collect(),
        }
    }

    /// Divide by the leading coefficient so the leading term is `+1 * word`.
    pub fn monic(&self) -> NcPoly {
        match self.leading() {
            None => NcPoly::zero(),
            Some((_, c)) => {
                let inv = c.clone().recip();
                self.scale(&inv)
            }
        }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> NcPoly {
        let mut out = NcPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `[p, q] = pq - qp`.
    pub fn bracket(&self, other: &NcPoly) -> NcPoly {
        &self.mul(other) - &other.mul(self)
    }

    /// Left-normed commutator `[a1, ..., ak] = [[a1, ..., a_{k-1}], ak]`.
    ///
    /// Needs at least two arguments.
    pub fn commutator(args: &[NcPoly]) -> Result<NcPoly, FreeAlgError> {
        if args.len() < 2 {
            return Err(FreeAlgError::CommutatorArity(args.len()));
        }
        let mut acc = args[0].bracket(&args[1]);
        for arg in &args[2..] {
            acc = acc.bracket(arg);
        }
        Ok(acc)
    }

    /// The standard polynomial `s_k = sum_{sigma} sign(sigma) x_{sigma(1)} ... x_{sigma(k)}`.
    pub fn standard_polynomial(k: usize) -> NcPoly {
        assert!(k >= 1);
        let mut out = NcPoly::zero();
        for (perm, sign) in signed_permutations(k) {
            let word = Word::new(perm.iter().map(|&i| (i + 1) as u16).collect());
            out.add_term(word, rat_int(sign as i64));
        }
        out
    }

    /// Algebra-endomorphism image: replace `x_{i+1}` by `images[i]`.
    ///
    /// Every variable occurring in `self` must have an image. When
    /// `unitary` is false the images must have zero constant term (the
    /// endomorphism must preserve the augmentation ideal).
    pub fn substitute(&self, images: &[NcPoly], unitary: bool) -> Result<NcPoly, FreeAlgError> {
        let maxv = self.max_variable() as usize;
        if maxv > images.len() {
            return Err(FreeAlgError::MissingImage(maxv as u16));
        }
        if !unitary {
            for (i, img) in images.iter().enumerate() {
                if !img.constant_term().is_zero() {
                    return Err(FreeAlgError::ConstantImage((i + 1) as u16));
                }
            }
        }
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NcPoly::constant(c.clone());
            for &l in w.letters() {
                prod = prod.mul(&images[(l - 1) as usize]);
                if prod.is_zero() {
                    break;
                }
            }
            out.add_assign(&prod);
        }
        Ok(out)
    }

    /// Split into multihomogeneous components, keyed by multidegree over `d`
    /// variables. The components sum back to the polynomial.
    pub fn multihomogeneous_components(&self, d: usize) -> BTreeMap<MultiDeg, NcPoly> {
        let mut out: BTreeMap<MultiDeg, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            let md = w.multidegree(d);
            out.entry(md)
                .or_insert_with(NcPoly::zero)
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// The component of terms whose words have exactly the given multidegree.
    pub fn multidegree_component(&self, mdeg: &MultiDeg) -> NcPoly {
        let d = mdeg.dim();
        NcPoly::from_terms(self.terms.iter().filter_map(|(w, c)| {
            if w.max_letter() as usize <= d && &w.multidegree(d) == mdeg {
                Some((w.clone(), c.clone()))
            } else {
                None
            }
        }))
    }

    /// Leading coefficient made positive (used for display canonicalization).
    pub fn sign_normalized(&self) -> NcPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        NcPoly::mul(self, rhs)
    }
}

impl std::fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::ncparse::format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn x(i: u16) -> NcPoly {
        NcPoly::var(i)
    }

    #[test]
    fn product_concatenates() {
        let p = x(1).mul(&x(2));
        assert_eq!(p, NcPoly::monomial(Word::new(vec![1, 2]), rat_int(1)));
    }

    #[test]
    fn bilinear_expansion() {
        // (x1 + x2)(x1 - x2) = x1^2 - x1x2 + x2x1 - x2^2
        let p = (&x(1) + &x(2)).mul(&(&x(1) - &x(2)));
        assert_eq!(p.coeff(&Word::new(vec![1, 1])), rat_int(1));
        assert_eq!(p.coeff(&Word::new(vec![1, 2])), rat_int(-1));
        assert_eq!(p.coeff(&Word::new(vec![2, 1])), rat_int(1));
        assert_eq!(p.coeff(&Word::new(vec![2, 2])), rat_int(-1));
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn unit_is_neutral() {
        let p = (&x(1) - &x(2).scale(&rat(3, 2))).mul(&x(1));
        assert_eq!(p.mul(&NcPoly::one()), p);
        assert_eq!(NcPoly::one().mul(&p), p);
    }

    #[test]
    fn commutator_examples() {
        let c = NcPoly::commutator(&[x(1), x(2)]).unwrap();
        assert_eq!(c, &x(1).mul(&x(2)) - &x(2).mul(&x(1)));

        assert!(NcPoly::commutator(&[x(1), x(1)]).unwrap().is_zero());
        assert!(NcPoly::commutator(&[x(1)]).is_err());

        // left-normed triple: x1x2x3 - x2x1x3 - x3x1x2 + x3x2x1
        let t = NcPoly::commutator(&[x(1), x(2), x(3)]).unwrap();
        assert_eq!(t.coeff(&Word::new(vec![1, 2, 3])), rat_int(1));
        assert_eq!(t.coeff(&Word::new(vec![2, 1, 3])), rat_int(-1));
        assert_eq!(t.coeff(&Word::new(vec![3, 1, 2])), rat_int(-1));
        assert_eq!(t.coeff(&Word::new(vec![3, 2, 1])), rat_int(1));
        assert_eq!(t.num_terms(), 4);
    }

    #[test]
    fn substitution_examples() {
        // x1x2 with x1 -> x1 + x2, x2 -> x1 gives x1^2 + x2x1
        let p = x(1).mul(&x(2));
        let images = vec![&x(1) + &x(2), x(1)];
        let q = p.substitute(&images, true).unwrap();
        assert_eq!(q, &x(1).mul(&x(1)) + &x(2).mul(&x(1)));

        // commutator collapses under x2 -> x1
        let c = NcPoly::commutator(&[x(1), x(2)]).unwrap();
        assert!(c.substitute(&[x(1), x(1)], true).unwrap().is_zero());

        // x1^2 with x1 -> x1x2 gives x1x2x1x2
        let sq = x(1).mul(&x(1));
        let q = sq.substitute(&[x(1).mul(&x(2))], true).unwrap();
        assert_eq!(q, NcPoly::monomial(Word::new(vec![1, 2, 1, 2]), rat_int(1)));

        // missing image and nonunitary constant image are usage errors
        assert!(p.substitute(&[x(1)], true).is_err());
        assert!(p.substitute(&[NcPoly::one(), x(1)], false).is_err());
        assert!(p.substitute(&[NcPoly::one(), x(1)], true).is_ok());
    }

    #[test]
    fn standard_polynomials() {
        assert_eq!(NcPoly::standard_polynomial(1), x(1));
        let s2 = NcPoly::standard_polynomial(2);
        assert_eq!(s2, NcPoly::commutator(&[x(1), x(2)]).unwrap());
        let s3 = NcPoly::standard_polynomial(3);
        assert_eq!(s3.num_terms(), 6);
        assert_eq!(s3.coeff(&Word::new(vec![1, 2, 3])), rat_int(1));
        assert_eq!(s3.coeff(&Word::new(vec![2, 1, 3])), rat_int(-1));
        assert_eq!(s3.coeff(&Word::new(vec![3, 1, 2])), rat_int(1));
    }

    #[test]
    fn multihomogeneous_partition() {
        let p = &(&x(1).mul(&x(2)) + &x(2).mul(&x(1))) + &x(1).pow(3).scale(&rat(1, 3));
        let comps = p.multihomogeneous_components(2);
        assert_eq!(comps.len(), 2);
        let mut sum = NcPoly::zero();
        for c in comps.values() {
            sum.add_assign(c);
        }
        assert_eq!(sum, p);
    }
}
