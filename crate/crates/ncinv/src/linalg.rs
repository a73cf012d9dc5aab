//! Exact row reduction over the rationals, keyed by words.
//!
//! Rows are [`NcPoly`] values viewed as sparse vectors on the deglex word
//! basis. The reducer keeps an echelon set of monic rows indexed by their
//! leading (greatest) word; [`RowReducer::into_rref`] back-substitutes to
//! the fully reduced form when a canonical basis is needed.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::Zero;

use crate::freealg::{NcPoly, Word};
use crate::rat::Rat;

/// Incremental echelon basis of a subspace of the span of words.
#[derive(Clone, Default)]
pub struct RowReducer {
    /// pivot word -> monic row whose greatest word is the pivot.
    rows: BTreeMap<Word, NcPoly>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, w: &Word) -> bool {
        self.rows.contains_key(w)
    }

    /// Eliminate every pivot word from `p`; the remainder is supported on
    /// non-pivot words only and is the canonical representative of
    /// `p + span(self)` on the complement of the pivot set.
    ///
    /// One descending sweep suffices: subtracting the monic row for a word
    /// `w` only touches words below `w`, so everything above the sweep
    /// position stays clean.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        let mut out = p.clone();
        let mut bound: Option<Word> = None;
        loop {
            let next = out
                .largest_term_below(bound.as_ref())
                .map(|(w, c)| (w.clone(), c.clone()));
            match next {
                None => return out,
                Some((w, c)) => {
                    if let Some(row) = self.rows.get(&w) {
                        out.add_scaled(row, &-c);
                    }
                    bound = Some(w);
                }
            }
        }
    }

    /// Reduce and, if the remainder is nonzero, adopt it (made monic) as a
    /// new echelon row. Returns `true` when the rank grew.
    pub fn insert(&mut self, p: &NcPoly) -> bool {
        let rem = self.reduce(p);
        match rem.leading() {
            None => false,
            Some((w, _)) => {
                let w = w.clone();
                self.rows.insert(w, rem.monic());
                true
            }
        }
    }

    /// Does `p` lie in the span?
    pub fn contains(&self, p: &NcPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Back-substitute to full reduced row echelon form: every row then
    /// contains no pivot word other than its own leading word. Rows come
    /// back in increasing pivot order.
    pub fn into_rref(self) -> Vec<NcPoly> {
        let mut done = RowReducer::new();
        // ascending pivot order: smaller rows are already clean when a
        // larger row's tail gets reduced against them
        for (pivot, row) in self.rows {
            let mut tail = row.clone();
            tail.add_term(pivot.clone(), crate::rat::rat_int(-1));
            let clean_tail = done.reduce(&tail);
            let mut clean = clean_tail;
            clean.add_term(pivot.clone(), crate::rat::rat_int(1));
            done.rows.insert(pivot, clean);
        }
        done.rows.into_values().collect()
    }
}

/// Echelon basis that remembers how each row was built from the inserted
/// generators, so membership certificates can be extracted.
#[derive(Clone, Default)]
pub struct TrackedReducer {
    rows: BTreeMap<Word, (NcPoly, Combo)>,
}

/// Sparse linear combination over generator indices.
pub type Combo = BTreeMap<usize, Rat>;

fn combo_add_scaled(dst: &mut Combo, src: &Combo, s: &Rat) {
    if s.is_zero() {
        return;
    }
    for (i, c) in src {
        let entry = dst.entry(*i).or_insert_with(Rat::zero);
        *entry += c.clone() * s;
        if entry.is_zero() {
            dst.remove(i);
        }
    }
}

impl TrackedReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, p: &NcPoly) -> (NcPoly, Combo) {
        let mut out = p.clone();
        let mut combo = Combo::new();
        let mut bound: Bound<Word> = Bound::Unbounded;
        loop {
            let next = match &bound {
                Bound::Unbounded => out.leading().map(|(w, c)| (w.clone(), c.clone())),
                Bound::Excluded(b) => largest_below(&out, b),
                Bound::Included(_) => unreachable!(),
            };
            match next {
                None => return (out, combo),
                Some((w, c)) => {
                    if let Some((row, row_combo)) = self.rows.get(&w) {
                        let neg = -c;
                        out.add_scaled(row, &neg);
                        combo_add_scaled(&mut combo, row_combo, &neg);
                    }
                    bound = Bound::Excluded(w);
                }
            }
        }
    }

    /// Insert generator number `tag`. Returns `true` if the rank grew.
    pub fn insert(&mut self, p: &NcPoly, tag: usize) -> bool {
        let (rem, mut combo) = self.reduce_tracked(p);
        match rem.leading() {
            None => false,
            Some((w, lead)) => {
                let w = w.clone();
                let inv = lead.clone().recip();
                combo.insert(tag, Rat::zero());
                *combo.get_mut(&tag).unwrap() += crate::rat::rat_int(1);
                let combo = {
                    let mut scaled = Combo::new();
                    combo_add_scaled(&mut scaled, &combo, &inv);
                    scaled
                };
                self.rows.insert(w, (rem.monic(), combo));
                true
            }
        }
    }

    /// If `p` lies in the span, return coefficients `c` over the inserted
    /// generator tags with `p = sum c_t * generator_t`.
    pub fn express(&self, p: &NcPoly) -> Option<Combo> {
        let (rem, combo) = self.reduce_tracked(p);
        if rem.is_zero() {
            // p - sum combo = 0, so p = -(-combo) ... reduce subtracts, so
            // p = sum over tags of (-combo)
            let mut out = Combo::new();
            combo_add_scaled(&mut out, &combo, &crate::rat::rat_int(-1));
            Some(out)
        } else {
            None
        }
    }
}

/// Solve `target + sum_t c_t * candidates[t] = 0` exactly.
///
/// Returns the deterministic particular solution found by eliminating the
/// candidates in the given order (free coefficients stay zero), or `None`
/// when the system is inconsistent.
pub fn solve_affine(candidates: &[NcPoly], target: &NcPoly) -> Option<Vec<Rat>> {
    let mut reducer = TrackedReducer::new();
    for (t, cand) in candidates.iter().enumerate() {
        reducer.insert(cand, t);
    }
    let combo = reducer.express(target)?;
    let mut out = vec![Rat::zero(); candidates.len()];
    for (t, c) in combo {
        out[t] = -c;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::NcPoly;
    use crate::rat::{rat, rat_int};

    fn w(letters: &[u16]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn rank_and_membership() {
        let mut r = RowReducer::new();
        let a = &NcPoly::monomial(w(&[1, 2]), rat_int(1)) - &NcPoly::monomial(w(&[2, 1]), rat_int(1));
        let b = NcPoly::monomial(w(&[2, 1]), rat_int(2));
        assert!(r.insert(&a));
        assert!(r.insert(&b));
        assert!(!r.insert(&a));
        assert_eq!(r.rank(), 2);
        // x1x2 = (x1x2 - x2x1) + x2x1 is in the span
        assert!(r.contains(&NcPoly::monomial(w(&[1, 2]), rat(5, 3))));
        assert!(!r.contains(&NcPoly::monomial(w(&[1, 1]), rat_int(1))));
    }

    #[test]
    fn rref_rows_are_mutually_reduced() {
        let mut r = RowReducer::new();
        // rows with overlapping support
        let p1 = &NcPoly::monomial(w(&[2, 2]), rat_int(1)) + &NcPoly::monomial(w(&[1, 1]), rat_int(1));
        let p2 = &NcPoly::monomial(w(&[2, 1]), rat_int(3)) + &NcPoly::monomial(w(&[1, 1]), rat_int(1));
        r.insert(&p1);
        r.insert(&p2);
        let rows = r.clone().into_rref();
        let pivots: Vec<Word> = rows
            .iter()
            .map(|row| row.leading().unwrap().0.clone())
            .collect();
        for row in &rows {
            for (word, _) in row.terms() {
                let is_own_pivot = word == row.leading().unwrap().0;
                assert!(is_own_pivot || !pivots.contains(word));
            }
        }
    }

    #[test]
    fn tracked_expression_reassembles() {
        let gens = vec![
            &NcPoly::monomial(w(&[1, 2]), rat_int(1)) - &NcPoly::monomial(w(&[2, 1]), rat_int(1)),
            &NcPoly::monomial(w(&[2, 1]), rat_int(1)) + &NcPoly::monomial(w(&[1, 1]), rat_int(2)),
            NcPoly::monomial(w(&[1, 1]), rat_int(5)),
        ];
        let mut r = TrackedReducer::new();
        for (i, g) in gens.iter().enumerate() {
            r.insert(g, i);
        }
        let target = &NcPoly::monomial(w(&[1, 2]), rat_int(3)) + &NcPoly::monomial(w(&[1, 1]), rat(1, 2));
        let combo = r.express(&target).expect("target is in the span");
        let mut rebuilt = NcPoly::zero();
        for (t, c) in &combo {
            rebuilt.add_scaled(&gens[*t], c);
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn affine_solver_prefers_early_unknowns() {
        // candidates v0 = v1 = x1; target = x1. Solution should use c0 only.
        let v = vec![NcPoly::var(1), NcPoly::var(1)];
        let sol = solve_affine(&v, &NcPoly::var(1)).unwrap();
        assert_eq!(sol, vec![rat_int(-1), rat_int(0)]);
        // inconsistent system
        assert!(solve_affine(&v, &NcPoly::var(2)).is_none());
    }
}
