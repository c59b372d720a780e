//! Maps between Skolem pairings and permutations.
//!
//! An extremal pairing of `{1, ..., 2n}` (every pair straddles `n`) is the
//! same data as a permutation `pi` of `{1, ..., n}` with `pi(s) = t - n`;
//! the diagonal of cell `(s, pi(s))` is then exactly `t - s`. Any pairing of
//! `{1, ..., 2n}` is the same data as a fixed-point-free involution of
//! `{1, ..., 2n}` swapping the two ends of every pair.
//!
//! The inverse maps validate their input instead of trusting it.

use crate::error::{Error, Result};
use crate::skolem::{DifferenceMultiset, Pairing};
use crate::xray::{Characteristic, Permutation};

/// `pi(s) = t - n` for every pair `(s, t)`.
pub fn extremal_pairing_to_permutation(p: &Pairing) -> Result<Permutation> {
    let n = p.order();
    let mut images = vec![0; n];
    for &(s, t) in p.pairs() {
        if s > n || t <= n {
            return Err(Error::NotExtremal { s, t, n });
        }
        images[s - 1] = t - n;
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Pairs `(s, pi(s) + n)`.
pub fn permutation_to_extremal_pairing(pi: &Permutation) -> Pairing {
    let n = pi.order();
    Pairing::from_pairs_unchecked(
        pi.images()
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1, v + n))
            .collect(),
    )
}

/// The involution of `{1, ..., 2n}` exchanging `s` and `t` for every pair.
pub fn pairing_to_involution(p: &Pairing) -> Permutation {
    let mut images = vec![0; 2 * p.order()];
    for &(s, t) in p.pairs() {
        images[s - 1] = t;
        images[t - 1] = s;
    }
    Permutation::from_images_unchecked(images)
}

pub fn involution_to_pairing(pi: &Permutation) -> Result<Pairing> {
    let images = pi.images();
    if images.len() % 2 == 1 {
        return Err(Error::NotInvolution(format!("odd order {}", images.len())));
    }
    let mut pairs = Vec::with_capacity(images.len() / 2);
    for (idx, &v) in images.iter().enumerate() {
        let i = idx + 1;
        if v == i {
            return Err(Error::NotInvolution(format!("{i} is a fixed point")));
        }
        if pi.image(v) != i {
            return Err(Error::NotInvolution(format!(
                "pi(pi({i})) = {} != {i}",
                pi.image(v)
            )));
        }
        if i < v {
            pairs.push((i, v));
        }
    }
    Ok(Pairing::from_pairs_unchecked(pairs))
}

/// `pi(pi(i)) = i` and `pi(i) != i` for all `i`.
pub fn is_fixed_point_free_involution(pi: &Permutation) -> bool {
    pi.images()
        .iter()
        .enumerate()
        .all(|(idx, &v)| v != idx + 1 && pi.image(v) == idx + 1)
}

/// `(2n - a_n, ..., 2n - a_1, 2n + a_1, ..., 2n + a_n)`, the Toeplitz
/// characteristic of the involution built from any pairing with differences `a`.
pub fn involution_characteristic(a: &DifferenceMultiset) -> Result<Characteristic> {
    let two_n = 2 * a.len() as u64;
    if let Some(&bad) = a.diffs().iter().find(|&&x| x >= two_n) {
        return Err(Error::DifferenceOutOfRange {
            value: bad,
            bound: two_n,
        });
    }
    let lower = a.diffs().iter().rev().map(|&x| (two_n - x) as usize);
    let upper = a.diffs().iter().map(|&x| (two_n + x) as usize);
    Characteristic::new(lower.chain(upper).collect())
}
