//! Reconstruction of permutations from a prescribed diagonal X-ray.
//!
//! Rows are filled top to bottom. Each diagonal keeps its remaining demand,
//! and a branch is cut as soon as some diagonal needs more cells than the
//! unfilled rows can still put on it.

use crate::error::{Error, Result};
use crate::search::{NodeCounter, Outcome, SearchBudget, SearchResult};
use crate::xray::{Characteristic, Permutation, XRay};

struct Reconstruction {
    n: usize,
    demand: Vec<u64>,
    used_cols: Vec<bool>,
    images: Vec<usize>,
    counter: NodeCounter,
}

enum Flow {
    Continue,
    Stop,
    Exhausted,
}

impl Reconstruction {
    fn new(counts: Vec<u64>, budget: SearchBudget) -> Self {
        let n = counts.len().div_ceil(2);
        Self {
            n,
            demand: counts,
            used_cols: vec![false; n + 1],
            images: Vec::with_capacity(n),
            counter: NodeCounter::new(budget),
        }
    }

    /// Every diagonal can still be served by the rows below `row`.
    fn feasible_below(&self, row: usize) -> bool {
        let n = self.n;
        for (idx, &need) in self.demand.iter().enumerate() {
            if need == 0 {
                continue;
            }
            let k = idx + 1;
            // cells (r, r + k - n) for r in row+1..=n
            let reachable = (row + 1..=n)
                .filter(|&r| {
                    let c = r + k;
                    c > n && c - n <= n && !self.used_cols[c - n]
                })
                .count() as u64;
            if reachable < need {
                return false;
            }
        }
        true
    }

    fn run(&mut self, leaf: &mut dyn FnMut(&[usize]) -> bool) -> Flow {
        if !self.counter.tick() {
            return Flow::Exhausted;
        }
        let row = self.images.len() + 1;
        if row > self.n {
            return if leaf(&self.images) {
                Flow::Continue
            } else {
                Flow::Stop
            };
        }
        for col in 1..=self.n {
            if self.used_cols[col] {
                continue;
            }
            let d = self.n + col - row - 1;
            if self.demand[d] == 0 {
                continue;
            }
            self.demand[d] -= 1;
            self.used_cols[col] = true;
            self.images.push(col);
            let flow = if self.feasible_below(row) {
                self.run(leaf)
            } else {
                Flow::Continue
            };
            self.images.pop();
            self.used_cols[col] = false;
            self.demand[d] += 1;
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

fn integer_counts(x: &XRay) -> Result<Vec<u64>> {
    x.counts().ok_or_else(|| {
        let index = x
            .sums()
            .iter()
            .position(|v| crate::rational::to_u64(v).is_none())
            .map_or(0, |i| i + 1);
        Error::NonIntegerXRay { index }
    })
}

/// Finds some `pi` with `diagonal_xray(pi) == x`, proves there is none, or
/// runs out of budget.
pub fn recognize_xray(x: &XRay, budget: SearchBudget) -> Result<SearchResult<Permutation>> {
    let counts = integer_counts(x)?;
    let mut search = Reconstruction::new(counts, budget);
    let mut witness = None;
    let flow = search.run(&mut |images| {
        witness = Some(Permutation::from_images_unchecked(images.to_vec()));
        false
    });
    let outcome = match (witness, flow) {
        (Some(w), _) => Outcome::Found(w),
        (None, Flow::Exhausted) => Outcome::BudgetExhausted,
        (None, _) => Outcome::ProvenNone,
    };
    Ok(SearchResult {
        outcome,
        nodes_explored: search.counter.explored,
    })
}

/// Number of `pi` in `S_n` whose Toeplitz characteristic is `c`.
pub fn count_permutations_with_characteristic(c: &Characteristic, cap: usize) -> Result<u128> {
    let n = c.order();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut search = Reconstruction::new(c.to_counts(), SearchBudget::UNLIMITED);
    let mut count = 0u128;
    search.run(&mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::enumerate::permutations;
    use crate::search::SearchStatus;
    use crate::xray::diagonal_counts;
    use std::collections::BTreeMap;

    fn xray(v: &[u64]) -> XRay {
        XRay::from_counts(v).unwrap()
    }

    #[test]
    fn recognize_examples() {
        let r = recognize_xray(&xray(&[1, 0, 1, 0, 1]), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(r.witness().unwrap().images(), &[3, 2, 1]);
        let r = recognize_xray(&xray(&[0, 0, 3, 0, 0]), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(r.witness().unwrap().images(), &[1, 2, 3]);
        let r = recognize_xray(&xray(&[1, 1, 1, 0, 0]), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(r.status(), SearchStatus::None);
    }

    #[test]
    fn rejects_fractional_targets() {
        let half = crate::rational::parse_rational("1/2").unwrap();
        let x = XRay::new(vec![half.clone(), crate::rational::one(), half]).unwrap();
        assert_eq!(
            recognize_xray(&x, SearchBudget::UNLIMITED),
            Err(Error::NonIntegerXRay { index: 1 })
        );
    }

    #[test]
    fn budget_is_reported() {
        let r = recognize_xray(&xray(&[1, 0, 0, 1, 1, 1, 0]), SearchBudget::nodes(2)).unwrap();
        assert_eq!(r.status(), SearchStatus::Budget);
    }

    /// Every integer vector of the right length and sum is accepted exactly
    /// when some permutation has it as X-ray, and counts agree with brute force.
    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=5usize {
            let mut tally: BTreeMap<Vec<u64>, u128> = BTreeMap::new();
            for images in permutations(n) {
                *tally.entry(diagonal_counts(&images)).or_default() += 1;
            }
            for target in compositions(n as u64, 2 * n - 1) {
                let x = XRay::from_counts(&target).unwrap();
                let r = recognize_xray(&x, SearchBudget::UNLIMITED).unwrap();
                let expected = tally.get(&target).copied().unwrap_or(0);
                assert_eq!(r.is_found(), expected > 0, "{target:?}");
                if let Some(pi) = r.witness() {
                    assert_eq!(diagonal_counts(pi.images()), target);
                }
                let c = crate::xray::characteristic_of_xray(&x).unwrap();
                assert_eq!(
                    count_permutations_with_characteristic(&c, 8).unwrap(),
                    expected
                );
            }
        }
    }

    fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
            })
            .collect()
    }

    #[test]
    fn count_examples() {
        let c = Characteristic::new(vec![3, 3, 3]).unwrap();
        assert_eq!(count_permutations_with_characteristic(&c, 8).unwrap(), 1);
        let c = Characteristic::new(vec![1, 4, 5, 6]).unwrap();
        assert_eq!(
            count_permutations_with_characteristic(&c, 3),
            Err(Error::CapExceeded { n: 4, cap: 3 })
        );
    }
}
