//! Deterministic enumerators over the small finite families the checks sweep.

use itertools::Itertools;

use crate::skolem::Pairing;

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).permutations(n)
}

/// All `(2n - 1)!!` pairings of `{1, ..., 2n}`, matching the smallest free
/// element first and trying partners in increasing order.
pub fn pairings(n: usize) -> Vec<Pairing> {
    fn rec(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Pairing>) {
        if free.is_empty() {
            out.push(Pairing::from_pairs_unchecked(acc.clone()));
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            acc.push((first, partner));
            rec(free, acc, out);
            acc.pop();
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut (1..=2 * n).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// Strictly increasing `n`-subsets of `1..=max`, lexicographic.
pub fn increasing_sets(n: usize, max: u64) -> impl Iterator<Item = Vec<u64>> {
    (1..=max).combinations(n)
}

/// Non-decreasing length-`n` sequences over `1..=max`, lexicographic.
pub fn nondecreasing_multisets(n: usize, max: u64) -> impl Iterator<Item = Vec<u64>> {
    (1..=max).combinations_with_replacement(n)
}

/// `(2n - 1)!!`.
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_counts() {
        for n in 1..=5 {
            let ps = pairings(n);
            assert_eq!(ps.len() as u128, double_factorial_odd(n));
            let mut sorted = ps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ps.len());
        }
        assert!(pairings(0).is_empty());
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(1).collect::<Vec<_>>(), vec![vec![1]]);
    }
}
