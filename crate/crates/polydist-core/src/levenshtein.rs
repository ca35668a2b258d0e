//! Levenshtein edit distance in the rolling-row scan formulation, with the
//! Iverson-bracket 0/1 cost matrix, plus the classic Wagner-Fischer
//! full-matrix oracle.

use alloc::vec::Vec;

use crate::combinators::{scan, scan_same};

/// Minimal number of insertions, deletions and substitutions transforming
/// `p` into `q`, computed with a single rolling row (O(Q) memory).
pub fn levenshtein_distance<T: PartialEq>(p: &[T], q: &[T]) -> usize {
    if p.is_empty() {
        return q.len();
    }
    if q.is_empty() {
        return p.len();
    }

    // Row for p[0]: candidates j + [p0 != qj] (j counted from 0), then a
    // left scan of min(acc + 1, candidate) seeded with the first candidate.
    let first: Vec<usize> = q
        .iter()
        .enumerate()
        .map(|(j, c)| j + usize::from(p[0] != *c))
        .collect();
    let mut v = scan_same(|&acc: &usize, &c| (acc + 1).min(c), &first)
        .expect("q is nonempty");

    for (i, pc) in p.iter().enumerate().skip(1) {
        // Candidates from the previous row (pre-update): diagonal
        // substitution vs deletion from above.
        let steps: Vec<usize> = (1..q.len())
            .map(|j| (v[j - 1] + usize::from(*pc != q[j])).min(v[j] + 1))
            .collect();
        let init = (i + usize::from(*pc != q[0])).min(v[0] + 1);
        v = scan(|&acc, &c: &usize| (acc + 1).min(c), init, &steps);
    }
    v[q.len() - 1]
}

/// [`levenshtein_distance`] on strings, comparing Unicode scalar values.
pub fn levenshtein_str(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    levenshtein_distance(&a, &b)
}

/// Classic Wagner-Fischer full-matrix DP with `D[i][0] = i`, `D[0][j] = j`.
/// O(PQ) memory; verification oracle.
pub fn levenshtein_oracle<T: PartialEq>(p: &[T], q: &[T]) -> usize {
    let cols = q.len() + 1;
    let mut d: Vec<usize> = Vec::with_capacity((p.len() + 1) * cols);
    d.extend(0..cols);
    for i in 1..=p.len() {
        for j in 0..cols {
            let cell = if j == 0 {
                i
            } else {
                let sub = d[(i - 1) * cols + j - 1] + usize::from(p[i - 1] != q[j - 1]);
                let del = d[(i - 1) * cols + j] + 1;
                let ins = d[i * cols + j - 1] + 1;
                sub.min(del).min(ins)
            };
            d.push(cell);
        }
    }
    d[p.len() * cols + q.len()]
}
