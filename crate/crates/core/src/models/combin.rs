//! Subsets and monomials in a fixed lexicographic order.

use std::collections::HashMap;

/// All `k`-subsets of `0..n` as sorted vectors, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Exponent vectors of total degree `d` in `n` variables, lexicographically
/// descending (`x0^d` first).
pub fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            go(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Position lookup for a list of keys.
pub fn index_map(items: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    items.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()
}

/// `(-1)^{#inversions}` of the concatenation `a ++ b` of two sorted lists,
/// or `None` if they share an element.
pub fn shuffle_sign(a: &[usize], b: &[usize]) -> Option<i64> {
    let mut inversions = 0usize;
    for x in a {
        for y in b {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Sorted union of two disjoint sorted lists.
pub fn merge(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(subsets(n, k).len(), binomial(n, k));
            }
            for d in 0..5 {
                assert_eq!(monomials(n, d).len(), if n == 0 { usize::from(d == 0) } else { binomial(n + d - 1, d) });
            }
        }
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(monomials(2, 1), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn shuffle_signs() {
        assert_eq!(shuffle_sign(&[0], &[1]), Some(1));
        assert_eq!(shuffle_sign(&[1], &[0]), Some(-1));
        assert_eq!(shuffle_sign(&[0, 2], &[1]), Some(-1));
        assert_eq!(shuffle_sign(&[0, 1], &[1]), None);
    }
}
