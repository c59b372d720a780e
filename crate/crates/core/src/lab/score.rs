//! Score vectors of tournaments.
//!
//! The fast path generates the non-decreasing sequences with
//! `s_1 + ... + s_k >= k(k-1)/2` and total `n(n-1)/2` (Landau's
//! characterization). The brute-force path orients every edge of `K_n` and
//! exists to cross-check the first one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order the brute-force tournament enumeration accepts.
pub const BRUTE_FORCE_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScoreVector {
    scores: Vec<u64>,
}

impl ScoreVector {
    pub fn scores(&self) -> &[u64] {
        &self.scores
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

fn landau(n: usize, visit: &mut dyn FnMut(&[u64])) {
    fn rec(n: u64, prefix: &mut Vec<u64>, sum: u64, visit: &mut dyn FnMut(&[u64])) {
        let k = prefix.len() as u64;
        let total = choose2(n);
        if k == n {
            if sum == total {
                visit(prefix);
            }
            return;
        }
        let low = prefix.last().copied().unwrap_or(0);
        let left = n - k;
        for v in low..n {
            let s = sum + v;
            if s < choose2(k + 1) {
                continue;
            }
            // every later score is at least v
            if s + (left - 1) * v > total {
                break;
            }
            if s + (left - 1) * (n - 1) < total {
                continue;
            }
            prefix.push(v);
            rec(n, prefix, s, visit);
            prefix.pop();
        }
    }
    rec(n as u64, &mut Vec::with_capacity(n), 0, visit);
}

/// Number of distinct score vectors of tournaments on `n` vertices.
pub fn count_score_vectors(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut count = 0;
    landau(n, &mut |_| count += 1);
    Ok(count)
}

/// The score vectors of order `n` from the Landau generator.
pub fn enumerate_score_vectors(n: usize) -> Result<BTreeSet<ScoreVector>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut out = BTreeSet::new();
    landau(n, &mut |s| {
        out.insert(ScoreVector { scores: s.to_vec() });
    });
    Ok(out)
}

/// Score vectors collected from all `2^(n(n-1)/2)` tournaments on `n` vertices.
pub fn enumerate_score_vectors_bruteforce(n: usize) -> Result<BTreeSet<ScoreVector>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let mut scores = vec![0u64; n];
        for (e, &(i, j)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                scores[i] += 1;
            } else {
                scores[j] += 1;
            }
        }
        scores.sort_unstable();
        out.insert(ScoreVector { scores });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[u64]) -> ScoreVector {
        ScoreVector { scores: v.to_vec() }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_score_vectors(1).unwrap(), 1);
        assert_eq!(count_score_vectors(3).unwrap(), 2);
        assert_eq!(count_score_vectors(4).unwrap(), 4);
        assert_eq!(count_score_vectors(0), Err(Error::EmptyOrder));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            enumerate_score_vectors_bruteforce(2).unwrap(),
            BTreeSet::from([sv(&[0, 1])])
        );
        assert_eq!(
            enumerate_score_vectors_bruteforce(3).unwrap(),
            BTreeSet::from([sv(&[0, 1, 2]), sv(&[1, 1, 1])])
        );
        assert_eq!(
            enumerate_score_vectors_bruteforce(4).unwrap(),
            BTreeSet::from([
                sv(&[0, 1, 2, 3]),
                sv(&[0, 2, 2, 2]),
                sv(&[1, 1, 1, 3]),
                sv(&[1, 1, 2, 2]),
            ])
        );
        assert!(matches!(
            enumerate_score_vectors_bruteforce(7),
            Err(Error::CapExceeded { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn generator_matches_tournaments() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_score_vectors(n).unwrap(),
                enumerate_score_vectors_bruteforce(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn generated_vectors_satisfy_landau() {
        for n in 1..=9usize {
            for s in enumerate_score_vectors(n).unwrap() {
                let s = s.scores();
                assert_eq!(s.iter().sum::<u64>(), choose2(n as u64));
                let mut prefix = 0;
                for (k, &v) in s.iter().enumerate() {
                    prefix += v;
                    assert!(prefix >= choose2(k as u64 + 1));
                }
            }
        }
    }
}
