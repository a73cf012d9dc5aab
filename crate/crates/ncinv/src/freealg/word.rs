//! Words: the monomial basis of the free associative algebra.

use std::cmp::Ordering;
use std::fmt;

/// A word in the variables `x1, x2, ...`, stored as 1-based letter indices.
/// The empty word is the unit monomial.
///
/// Words are totally ordered by *deglex*: shorter words first, ties broken
/// by left-to-right letter comparison with `x1 < x2 < ...`. The greatest
/// word of a polynomial under this order is its leading word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    /// The empty word (the monomial `1`).
    pub fn one() -> Self {
        Word(Vec::new())
    }

    /// The single-letter word `x_i` (1-based).
    pub fn var(i: u16) -> Self {
        assert!(i >= 1, "variable indices are 1-based");
        Word(vec![i])
    }

    /// Build from 1-based letter indices.
    pub fn new(letters: Vec<u16>) -> Self {
        assert!(letters.iter().all(|&l| l >= 1), "letter index 0");
        Word(letters)
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter index occurring, or 0 for the empty word.
    pub fn max_letter(&self) -> u16 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation (the monomial product).
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Per-variable letter counts over `d` variables.
    pub fn multidegree(&self, d: usize) -> MultiDeg {
        let mut counts = vec![0u32; d];
        for &l in &self.0 {
            let idx = (l as usize) - 1;
            assert!(idx < d, "letter x{l} outside dimension {d}");
            counts[idx] += 1;
        }
        MultiDeg(counts)
    }

    /// The subword spanned by letter positions `lo..hi` (0-based, half open).
    pub fn slice(&self, lo: usize, hi: usize) -> Word {
        Word(self.0[lo..hi].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &l in &self.0 {
            if !first {
                write!(f, ".")?;
            }
            write!(f, "x{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// A multidegree: per-variable letter counts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiDeg(pub Vec<u32>);

impl MultiDeg {
    pub fn zero(d: usize) -> Self {
        MultiDeg(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiDeg) -> Option<MultiDeg> {
        if self.0.len() != other.0.len() {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiDeg(out))
    }

    /// The multidegree with one less `x_i` (0-based `i`), if possible.
    pub fn minus_var(&self, i: usize) -> Option<MultiDeg> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(MultiDeg(v))
    }

    pub fn plus_var(&self, i: usize) -> MultiDeg {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiDeg(v)
    }
}

/// All words of the given multidegree, in increasing deglex order.
pub fn words_of_multidegree(mdeg: &MultiDeg) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts = mdeg.0.clone();
    let mut cur: Vec<u16> = Vec::with_capacity(mdeg.total());
    fn rec(counts: &mut [u32], cur: &mut Vec<u16>, out: &mut Vec<Word>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(Word::new(cur.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push((i + 1) as u16);
                rec(counts, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, &mut out);
    out
}

/// All words of total degree `n` over `d` variables, increasing deglex order.
pub fn words_of_degree(d: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(n);
    fn rec(d: usize, n: usize, cur: &mut Vec<u16>, out: &mut Vec<Word>) {
        if n == 0 {
            out.push(Word::new(cur.clone()));
            return;
        }
        for i in 1..=d {
            cur.push(i as u16);
            rec(d, n - 1, cur, out);
            cur.pop();
        }
    }
    rec(d, n, &mut cur, &mut out);
    out
}

/// All multidegrees over `d` variables of total degree `n`, increasing.
pub fn multidegrees_of_degree(d: usize, n: usize) -> Vec<MultiDeg> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiDeg>) {
        if i == cur.len() - 1 {
            cur[i] = left as u32;
            out.push(MultiDeg(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v as u32;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    if d == 0 {
        if n == 0 {
            out.push(MultiDeg(Vec::new()));
        }
        return out;
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// Number of words of the given multidegree (a multinomial coefficient).
pub fn multidegree_word_count(mdeg: &MultiDeg) -> usize {
    let mut count: usize = 1;
    let mut placed: usize = 0;
    for &c in &mdeg.0 {
        for k in 1..=(c as usize) {
            placed += 1;
            count = count * placed / k;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let w1 = Word::new(vec![2]); // x2
        let w2 = Word::new(vec![1, 1]); // x1 x1
        let w3 = Word::new(vec![1, 2]); // x1 x2
        let w4 = Word::new(vec![2, 1]); // x2 x1
        assert!(w1 < w2, "degree dominates");
        assert!(w2 < w3 && w3 < w4, "lex within a degree");
        assert!(Word::one() < w1);
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(words_of_degree(2, 3).len(), 8);
        let md = MultiDeg(vec![2, 1]);
        let words = words_of_multidegree(&md);
        assert_eq!(words.len(), 3);
        assert_eq!(multidegree_word_count(&md), 3);
        assert!(words.windows(2).all(|w| w[0] < w[1]));
        let big = MultiDeg(vec![1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(multidegree_word_count(&big), 40320);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(multidegrees_of_degree(2, 4).len(), 5);
        assert_eq!(multidegrees_of_degree(3, 2).len(), 6);
    }
}
