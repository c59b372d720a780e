//! Difference multisets, pairings of `{1, ..., 2n}` and Skolem sequences.
//!
//! A multiset `A = {a_1 <= ... <= a_n}` is a (multi) Skolem set when
//! `{1, ..., 2n}` splits into `n` pairs `(s_i, t_i)` with `t_i - s_i = a_i`.
//! The search here is exact: it either produces such a pairing, proves that
//! none exists, or reports that its node budget ran out.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{NodeCounter, Outcome, SearchBudget, SearchResult};

/// Sorted multiset of positive differences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DifferenceMultiset {
    diffs: Vec<u64>,
}

impl DifferenceMultiset {
    /// Accepts the entries in any order and stores them sorted.
    pub fn new(mut diffs: Vec<u64>) -> Result<Self> {
        if diffs.is_empty() {
            return Err(Error::EmptyOrder);
        }
        if diffs.contains(&0) {
            return Err(Error::InvalidMultiset(
                "differences must be positive".into(),
            ));
        }
        diffs.sort_unstable();
        Ok(Self { diffs })
    }

    /// `{1, 2, ..., n}`.
    pub fn classic(n: usize) -> Result<Self> {
        Self::new((1..=n as u64).collect())
    }

    pub(crate) fn from_sorted_unchecked(diffs: Vec<u64>) -> Self {
        debug_assert!(diffs.windows(2).all(|w| w[0] <= w[1]) && !diffs.contains(&0));
        Self { diffs }
    }

    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn diffs(&self) -> &[u64] {
        &self.diffs
    }

    /// True iff the entries are pairwise distinct.
    pub fn is_set(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0] < w[1])
    }

    pub fn sum(&self) -> u128 {
        self.diffs.iter().map(|&a| a as u128).sum()
    }
}

impl TryFrom<Vec<u64>> for DifferenceMultiset {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DifferenceMultiset> for Vec<u64> {
    fn from(a: DifferenceMultiset) -> Self {
        a.diffs
    }
}

impl fmt::Display for DifferenceMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.diffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// The number of even entries is even.
pub fn parity_condition(a: &DifferenceMultiset) -> bool {
    a.diffs.iter().filter(|&&x| x % 2 == 0).count() % 2 == 0
}

/// `a_m + ... + a_n <= n^2 - (m-1)^2` for every `1 <= m <= n`.
pub fn density_condition(a: &DifferenceMultiset) -> bool {
    let n = a.len() as u128;
    let mut suffix = 0u128;
    for (idx, &x) in a.diffs.iter().enumerate().rev() {
        suffix += x as u128;
        let m = idx as u128 + 1;
        if suffix > n * n - (m - 1) * (m - 1) {
            return false;
        }
    }
    true
}

/// Prefix form of the density bound: `a_1 + ... + a_k >= k^2` for every `k`,
/// with equality at `k = n`.
///
/// For extremal multisets this coincides with [`density_condition`].
pub fn prefix_density_condition(a: &DifferenceMultiset) -> bool {
    prefix_density(a.diffs.iter().map(|&x| x as u128), a.len())
}

pub(crate) fn prefix_density(values: impl Iterator<Item = u128>, n: usize) -> bool {
    let mut prefix = 0u128;
    let mut k = 0u128;
    for x in values {
        prefix += x;
        k += 1;
        if prefix < k * k {
            return false;
        }
    }
    k == n as u128 && prefix == k * k
}

/// `a_1 + ... + a_n = n^2`.
pub fn is_extremal(a: &DifferenceMultiset) -> bool {
    let n = a.len() as u128;
    a.sum() == n * n
}

/// A partition of `{1, ..., 2n}` into pairs `(s, t)` with `s < t`, kept
/// sorted by `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = pairs.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(s, t) in &pairs {
            if s >= t {
                return Err(Error::InvalidPairing(format!(
                    "pair ({s}, {t}) is not increasing"
                )));
            }
            for p in [s, t] {
                if p == 0 || p > 2 * n {
                    return Err(Error::InvalidPairing(format!(
                        "position {p} outside 1..={}",
                        2 * n
                    )));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidPairing(format!("position {p} used twice")));
                }
            }
        }
        pairs.sort_unstable();
        Ok(Self { pairs })
    }

    pub(crate) fn from_pairs_unchecked(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        debug_assert!(Self::new(pairs.clone()).is_ok());
        Self { pairs }
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn differences(&self) -> DifferenceMultiset {
        let mut d: Vec<u64> = self.pairs.iter().map(|&(s, t)| (t - s) as u64).collect();
        d.sort_unstable();
        DifferenceMultiset::from_sorted_unchecked(d)
    }

    /// Every pair straddles the midpoint: `s <= n < t`.
    pub fn is_extremal(&self) -> bool {
        let n = self.order();
        self.pairs.iter().all(|&(s, t)| s <= n && t > n)
    }
}

impl TryFrom<Vec<(usize, usize)>> for Pairing {
    type Error = Error;

    fn try_from(v: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Pairing> for Vec<(usize, usize)> {
    fn from(p: Pairing) -> Self {
        p.pairs
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, t)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({s},{t})")?;
        }
        write!(f, "}}")
    }
}

/// Sequence of length `2n` in which every pair of equal symbols `a` sits
/// exactly `a` positions apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SkolemSequence {
    symbols: Vec<u64>,
}

impl SkolemSequence {
    pub fn new(symbols: Vec<u64>) -> Result<Self> {
        sequence_to_pairing(&symbols)?;
        Ok(Self { symbols })
    }

    pub fn symbols(&self) -> &[u64] {
        &self.symbols
    }

    pub fn to_pairing(&self) -> Pairing {
        sequence_to_pairing(&self.symbols).expect("validated on construction")
    }
}

impl TryFrom<Vec<u64>> for SkolemSequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SkolemSequence> for Vec<u64> {
    fn from(s: SkolemSequence) -> Self {
        s.symbols
    }
}

impl fmt::Display for SkolemSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Writes symbol `t - s` at both positions of every pair.
pub fn pairing_to_sequence(p: &Pairing) -> SkolemSequence {
    let mut symbols = vec![0u64; 2 * p.order()];
    for &(s, t) in p.pairs() {
        let a = (t - s) as u64;
        symbols[s - 1] = a;
        symbols[t - 1] = a;
    }
    SkolemSequence { symbols }
}

/// Recovers the pairing behind a sequence.
///
/// The leftmost unmatched occurrence of a symbol `a` can only pair with the
/// position `a` places to its right, so a single left-to-right scan decides
/// validity, including for repeated symbols.
pub fn sequence_to_pairing(symbols: &[u64]) -> Result<Pairing> {
    let len = symbols.len();
    if len == 0 {
        return Err(Error::EmptyOrder);
    }
    if len % 2 == 1 {
        return Err(Error::OddSequenceLength(len));
    }
    let mut matched = vec![false; len];
    let mut pairs = Vec::with_capacity(len / 2);
    for p in 0..len {
        if matched[p] {
            continue;
        }
        let a = symbols[p];
        if a == 0 {
            return Err(Error::InvalidSequence {
                value: 0,
                reason: "symbols must be positive".into(),
            });
        }
        let q = usize::try_from(a)
            .ok()
            .and_then(|a| p.checked_add(a))
            .filter(|&q| q < len);
        match q {
            Some(q) if symbols[q] == a && !matched[q] => {
                matched[p] = true;
                matched[q] = true;
                pairs.push((p + 1, q + 1));
            }
            _ => {
                return Err(Error::InvalidSequence {
                    value: a,
                    reason: format!("no partner {a} places after position {}", p + 1),
                })
            }
        }
    }
    Ok(Pairing { pairs })
}

type Leaf<'a> = dyn FnMut(&[(usize, usize)]) -> bool + 'a;

/// Depth-first search over pairings. The lowest free position is always the
/// left end of its pair, so branching on the distinct remaining values there
/// (largest first) visits every pairing exactly once.
struct PartitionSearch {
    len: usize,
    free: Vec<bool>,
    values: Vec<u64>,
    remaining: Vec<u32>,
    pairs: Vec<(usize, usize)>,
    counter: NodeCounter,
}

enum Flow {
    Continue,
    Stop,
    Exhausted,
}

impl PartitionSearch {
    fn new(a: &DifferenceMultiset, budget: SearchBudget) -> Self {
        let mut values: Vec<u64> = Vec::new();
        let mut remaining: Vec<u32> = Vec::new();
        for &x in a.diffs().iter().rev() {
            if values.last() == Some(&x) {
                *remaining.last_mut().unwrap() += 1;
            } else {
                values.push(x);
                remaining.push(1);
            }
        }
        let len = 2 * a.len();
        Self {
            len,
            free: vec![true; len + 1],
            values,
            remaining,
            pairs: Vec::with_capacity(a.len()),
            counter: NodeCounter::new(budget),
        }
    }

    /// Calls `leaf` on each complete pairing; `leaf` returns false to stop.
    fn run(&mut self, start: usize, leaf: &mut Leaf<'_>) -> Flow {
        if !self.counter.tick() {
            return Flow::Exhausted;
        }
        let Some(s) = (start..=self.len).find(|&p| self.free[p]) else {
            return if leaf(&self.pairs) {
                Flow::Continue
            } else {
                Flow::Stop
            };
        };
        for vi in 0..self.values.len() {
            if self.remaining[vi] == 0 {
                continue;
            }
            let t = s as u64 + self.values[vi];
            if t > self.len as u64 || !self.free[t as usize] {
                continue;
            }
            let t = t as usize;
            self.free[s] = false;
            self.free[t] = false;
            self.remaining[vi] -= 1;
            self.pairs.push((s, t));
            let flow = self.run(s + 1, leaf);
            self.pairs.pop();
            self.remaining[vi] += 1;
            self.free[s] = true;
            self.free[t] = true;
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

/// Exact search for a pairing of `{1, ..., 2n}` realising the differences in `a`.
pub fn solve_partition(a: &DifferenceMultiset, budget: SearchBudget) -> SearchResult<Pairing> {
    let mut search = PartitionSearch::new(a, budget);
    let mut witness = None;
    let flow = search.run(1, &mut |pairs| {
        witness = Some(Pairing::from_pairs_unchecked(pairs.to_vec()));
        false
    });
    let outcome = match (witness, flow) {
        (Some(w), _) => Outcome::Found(w),
        (None, Flow::Exhausted) => Outcome::BudgetExhausted,
        (None, _) => Outcome::ProvenNone,
    };
    SearchResult {
        outcome,
        nodes_explored: search.counter.explored,
    }
}

/// Number of distinct pairings realising `a`. Equal differences are
/// interchangeable, so pairings are counted as sets of pairs.
pub fn count_partitions(a: &DifferenceMultiset) -> u128 {
    let mut search = PartitionSearch::new(a, SearchBudget::UNLIMITED);
    let mut count = 0u128;
    search.run(1, &mut |_| {
        count += 1;
        true
    });
    count
}

/// A Skolem sequence for `{1, ..., n}`, found by the general solver.
pub fn classic_skolem(n: usize) -> Result<Option<SkolemSequence>> {
    let a = DifferenceMultiset::classic(n)?;
    Ok(solve_partition(&a, SearchBudget::UNLIMITED)
        .into_witness()
        .map(|p| pairing_to_sequence(&p)))
}
