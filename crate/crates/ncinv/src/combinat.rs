//! Small combinatorial enumerators shared by the algebra modules.
//!
//! Everything here is deterministic: results come back in a fixed order so
//! that row reductions built from them are reproducible.

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// All permutations of `0..n` with their signs, lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect()
}

/// Sign of a permutation of `0..n` given as an image list.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Ordered compositions of `total` into `parts` summands, each `>= min_part`.
pub fn compositions(total: usize, parts: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(
        total: usize,
        parts: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < min_part * parts {
            return;
        }
        let hi = total - min_part * (parts - 1);
        for v in min_part..=hi {
            cur.push(v);
            rec(total - v, parts - 1, min_part, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, min_part, &mut cur, &mut out);
    out
}

/// Set partitions of `{0, .., m-1}` into exactly `n` nonempty blocks.
///
/// Blocks are sorted internally and listed by their least element, so each
/// unordered partition is produced exactly once.
pub fn set_partitions(m: usize, n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if n == 0 || n > m {
        return out;
    }
    // assignment[i] = block index of element i; block indices appear in
    // first-seen order, which canonicalizes the enumeration.
    let mut assignment = vec![0usize; m];
    fn rec(i: usize, used: usize, m: usize, n: usize, assignment: &mut [usize], out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            if used == n {
                let mut blocks = vec![Vec::new(); n];
                for (elt, &b) in assignment.iter().enumerate() {
                    blocks[b].push(elt);
                }
                out.push(blocks);
            }
            return;
        }
        // remaining elements must be able to open the missing blocks
        if n - used > m - i {
            return;
        }
        for b in 0..used.min(n) {
            assignment[i] = b;
            rec(i + 1, used, m, n, assignment, out);
        }
        if used < n {
            assignment[i] = used;
            rec(i + 1, used + 1, m, n, assignment, out);
        }
    }
    rec(0, 0, m, n, &mut assignment, &mut out);
    out
}

/// Nonempty subsets of `{0, .., n-1}` as bitmasks, increasing.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = u32> {
    assert!(n <= 31);
    1u32..(1u32 << n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts_and_signs() {
        assert_eq!(permutations(3).len(), 6);
        let signed = signed_permutations(3);
        let total: i32 = signed.iter().map(|(_, s)| *s as i32).sum();
        assert_eq!(total, 0);
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }

    #[test]
    fn composition_counts() {
        // weak compositions of 4 into 3 parts: C(6,2) = 15
        assert_eq!(compositions(4, 3, 0).len(), 15);
        // strict compositions of 5 into 2 parts: 4
        assert_eq!(compositions(5, 2, 1).len(), 4);
        assert_eq!(compositions(3, 0, 0).len(), 0);
        assert_eq!(compositions(0, 0, 0).len(), 1);
    }

    #[test]
    fn stirling_counts() {
        // S(4,2) = 7, S(6,3) = 90
        assert_eq!(set_partitions(4, 2).len(), 7);
        assert_eq!(set_partitions(6, 3).len(), 90);
        assert_eq!(set_partitions(3, 3).len(), 1);
        assert_eq!(set_partitions(2, 3).len(), 0);
    }
}
