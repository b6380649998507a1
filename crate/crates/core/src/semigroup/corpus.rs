//! Exhaustive enumeration of small semigroups up to isomorphism.
//!
//! Associative tables are generated cell by cell with associativity checked
//! on every fully determined triple; each survivor is reduced to the
//! lexicographically least table among all relabellings, which is an exact
//! isomorphism invariant.

use std::collections::BTreeSet;

use super::Semigroup;
use crate::error::{Error, Result};

/// Largest order enumerated exhaustively by default.
pub const CORPUS_MAX_ORDER: usize = 4;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical_form(n: usize, table: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut cand = vec![0; n * n];
    for p in perms {
        for a in 0..n {
            for b in 0..n {
                cand[p[a] * n + p[b]] = p[table[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand.clone());
        }
    }
    best.expect("at least one permutation")
}

const UNSET: usize = usize::MAX;

fn consistent(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let left = t[xy * n + z];
                let right = t[x * n + yz];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(n: usize, cell: usize, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(t.clone());
        return;
    }
    for v in 0..n {
        t[cell] = v;
        if consistent(n, t) {
            fill(n, cell + 1, t, out);
        }
    }
    t[cell] = UNSET;
}

/// All associative tables on `0..n` (labelled, not up to isomorphism).
pub(crate) fn labelled_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fill(n, 0, &mut vec![UNSET; n * n], &mut out);
    out
}

/// One representative per isomorphism class of semigroups of order `n`, each
/// in canonical (lexicographically least) form, sorted.
pub fn corpus_of_order(n: usize) -> Result<Vec<Semigroup>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > CORPUS_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "exhaustive corpus order",
            limit: CORPUS_MAX_ORDER,
            actual: n,
        });
    }
    Ok(classes_of_order(n))
}

fn classes_of_order(n: usize) -> Vec<Semigroup> {
    let perms = permutations(n);
    let forms: BTreeSet<Vec<usize>> = labelled_tables(n)
        .iter()
        .map(|t| canonical_form(n, t, &perms))
        .collect();
    forms
        .into_iter()
        .map(|t| Semigroup::from_parts_unchecked(n, t))
        .collect()
}

/// Every semigroup of order `1..=max_order` up to isomorphism, ordered by
/// order then canonical table.
pub fn enumerate_corpus(max_order: usize) -> Result<Vec<Semigroup>> {
    enumerate_corpus_with(max_order, CORPUS_MAX_ORDER)
}

/// As [`enumerate_corpus`] with an explicit order limit. Order 5 takes
/// minutes; beyond that the labelled search is infeasible.
pub fn enumerate_corpus_with(max_order: usize, limit: usize) -> Result<Vec<Semigroup>> {
    if max_order > limit {
        return Err(Error::CapExceeded {
            what: "exhaustive corpus order",
            limit,
            actual: max_order,
        });
    }
    Ok((1..=max_order).flat_map(classes_of_order).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::are_isomorphic;

    /// Independent oracle: every table in `n^(n*n)`, filtered by a full
    /// associativity check, then deduplicated by pairwise isomorphism search.
    fn brute_force_count(n: usize) -> usize {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut reps: Vec<Semigroup> = Vec::new();
        for code in 0..total {
            let mut t = Vec::with_capacity(cells);
            let mut c = code;
            for _ in 0..cells {
                t.push(c % n);
                c /= n;
            }
            if let Ok(s) = Semigroup::from_table(n, t) {
                if !reps.iter().any(|r| are_isomorphic(r, &s).is_some()) {
                    reps.push(s);
                }
            }
        }
        reps.len()
    }

    #[test]
    fn order_one_and_two_match_brute_force() {
        assert_eq!(corpus_of_order(1).unwrap().len(), 1);
        let two = brute_force_count(2);
        assert_eq!(two, 5);
        assert_eq!(corpus_of_order(2).unwrap().len(), two);
    }

    #[test]
    fn order_three_matches_brute_force() {
        let three = brute_force_count(3);
        assert_eq!(three, 24);
        assert_eq!(corpus_of_order(3).unwrap().len(), three);
    }

    #[test]
    fn order_four_members_are_pairwise_non_isomorphic() {
        let four = corpus_of_order(4).unwrap();
        assert_eq!(four.len(), 188);
        for (i, a) in four.iter().enumerate() {
            for b in &four[i + 1..] {
                assert!(are_isomorphic(a, b).is_none());
            }
        }
    }

    #[test]
    fn corpus_is_deterministic_and_capped() {
        assert_eq!(enumerate_corpus(3).unwrap(), enumerate_corpus(3).unwrap());
        assert_eq!(enumerate_corpus(3).unwrap().len(), 1 + 5 + 24);
        assert!(matches!(
            enumerate_corpus(5),
            Err(Error::CapExceeded {
                limit: 4,
                actual: 5,
                ..
            })
        ));
    }
}
