//! Permutations, their diagonal and antidiagonal X-rays, and characteristics.
//!
//! Everything on the public surface is 1-indexed. The permutation matrix of
//! `pi` has a one in cell `(i, j)` exactly when `pi(i) = j`. Diagonals are
//! numbered `1..=2n-1`: diagonal `k` holds the cells with `i - j = n - k`, so
//! diagonal 1 is the bottom-left corner and diagonal `2n-1` the top-right one.
//! Antidiagonal `k` holds the cells with `i + j = k + 1`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {v} repeated"),
                });
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// `pi(i)` for `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Entry `(i, j)` of the permutation matrix.
    pub fn matrix_entry(&self, i: usize, j: usize) -> bool {
        self.image(i) == j
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.order()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { images: inv }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '[', ']', &self.images)
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    open: char,
    close: char,
    items: &[T],
) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "{close}")
}

/// Diagonal index (1-based) of cell `(i, j)` in an order-`n` matrix.
#[inline]
pub fn diagonal_index(n: usize, i: usize, j: usize) -> usize {
    n + j - i
}

/// Integer diagonal X-ray of a permutation given by its images.
///
/// Entry `k - 1` counts the rows `i` with `i - pi(i) = n - k`.
pub fn diagonal_counts(images: &[usize]) -> Vec<u64> {
    let n = images.len();
    let mut counts = vec![0u64; 2 * n - 1];
    for (row, &col) in images.iter().enumerate() {
        counts[diagonal_index(n, row + 1, col) - 1] += 1;
    }
    counts
}

/// Integer antidiagonal X-ray: entry `k - 1` counts the rows with `i + pi(i) = k + 1`.
pub fn antidiagonal_counts(images: &[usize]) -> Vec<u64> {
    let n = images.len();
    let mut counts = vec![0u64; 2 * n - 1];
    for (row, &col) in images.iter().enumerate() {
        counts[row + col - 1] += 1;
    }
    counts
}

/// Vector of diagonal sums of an order-`n` matrix, length `2n - 1`.
///
/// Entries are exact rationals so that the same type carries X-rays of
/// permutation matrices and of doubly stochastic matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XRay {
    order: usize,
    sums: Vec<Rational>,
}

impl XRay {
    /// Checks length `2n - 1`, non-negative entries and total `n`.
    pub fn new(sums: Vec<Rational>) -> Result<Self> {
        let len = sums.len();
        if len == 0 {
            return Err(Error::EmptyOrder);
        }
        if len.is_multiple_of(2) {
            return Err(Error::InvalidXRay(format!("even length {len}")));
        }
        let order = len.div_ceil(2);
        if let Some(k) = sums.iter().position(|v| v.is_negative()) {
            return Err(Error::InvalidXRay(format!("entry {} is negative", k + 1)));
        }
        let total: Rational = sums.iter().sum();
        if total != rational::from_int(order as i64) {
            return Err(Error::InvalidXRay(format!(
                "entries sum to {total}, expected {order}"
            )));
        }
        Ok(Self { order, sums })
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub(crate) fn from_counts_unchecked(counts: &[u64]) -> Self {
        Self {
            order: counts.len().div_ceil(2),
            sums: counts
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn sums(&self) -> &[Rational] {
        &self.sums
    }

    /// Entry `d_k`, `1 <= k <= 2n - 1`.
    pub fn get(&self, k: usize) -> &Rational {
        &self.sums[k - 1]
    }

    /// Integer view of the entries, if all of them are integers.
    pub fn counts(&self) -> Option<Vec<u64>> {
        self.sums.iter().map(rational::to_u64).collect()
    }

    /// The same sums read from diagonal `2n - 1` down to diagonal 1.
    pub fn reversed(&self) -> XRay {
        XRay {
            order: self.order,
            sums: self.sums.iter().rev().cloned().collect(),
        }
    }

    /// 1-based indices of the non-zero entries.
    pub fn support(&self) -> Vec<usize> {
        self.sums
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| k + 1)
            .collect()
    }
}

impl fmt::Display for XRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '(', ')', &self.sums)
    }
}

impl Serialize for XRay {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.sums.len()))?;
        for v in &self.sums {
            match rational::to_u64(v) {
                Some(c) => seq.serialize_element(&c)?,
                None => seq.serialize_element(&rational::format_rational(v))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalEntry {
    Int(i64),
    Text(String),
}

impl RationalEntry {
    fn into_rational(self) -> Result<Rational> {
        match self {
            RationalEntry::Int(v) => Ok(rational::from_int(v)),
            RationalEntry::Text(s) => rational::parse_rational(&s),
        }
    }
}

impl<'de> Deserialize<'de> for XRay {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RationalEntry>::deserialize(deserializer)?;
        let sums = raw
            .into_iter()
            .map(RationalEntry::into_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        XRay::new(sums).map_err(de::Error::custom)
    }
}

/// Sorted diagonal indices of an integer X-ray, index `k` repeated `d_k` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Characteristic {
    indices: Vec<usize>,
}

impl Characteristic {
    /// The order is the length of `indices`; entries must be non-decreasing in `1..=2n-1`.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let n = indices.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if let Some(&bad) = indices.iter().find(|&&v| v == 0 || v > 2 * n - 1) {
            return Err(Error::InvalidCharacteristic(format!(
                "index {bad} outside 1..={}",
                2 * n - 1
            )));
        }
        if indices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidCharacteristic("not non-decreasing".into()));
        }
        Ok(Self { indices })
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// True when no index repeats, i.e. the X-ray is binary.
    pub fn is_strict(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] < w[1])
    }

    /// Integer X-ray whose entry `k` is the multiplicity of `k`.
    pub fn to_counts(&self) -> Vec<u64> {
        let n = self.order();
        let mut counts = vec![0u64; 2 * n - 1];
        for &k in &self.indices {
            counts[k - 1] += 1;
        }
        counts
    }

    pub fn to_xray(&self) -> XRay {
        XRay::from_counts_unchecked(&self.to_counts())
    }
}

impl TryFrom<Vec<usize>> for Characteristic {
    type Error = Error;

    fn try_from(indices: Vec<usize>) -> Result<Self> {
        Self::new(indices)
    }
}

impl From<Characteristic> for Vec<usize> {
    fn from(c: Characteristic) -> Self {
        c.indices
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '(', ')', &self.indices)
    }
}

/// Characteristic read directly off integer counts.
pub(crate) fn characteristic_of_counts(counts: &[u64]) -> Vec<usize> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n(k + 1, c as usize))
        .collect()
}

/// Diagonal (Toeplitz) X-ray of `pi`.
pub fn diagonal_xray(pi: &Permutation) -> XRay {
    XRay::from_counts_unchecked(&diagonal_counts(pi.images()))
}

/// Antidiagonal (Hankel) X-ray of `pi`.
pub fn antidiagonal_xray(pi: &Permutation) -> XRay {
    XRay::from_counts_unchecked(&antidiagonal_counts(pi.images()))
}

/// Reverses every row of the permutation matrix: `pi'(i) = n + 1 - pi(i)`.
///
/// The diagonal X-ray of `pi'` is the antidiagonal X-ray of `pi` read
/// backwards, and vice versa.
pub fn reverse_rows(pi: &Permutation) -> Permutation {
    let n = pi.order();
    Permutation {
        images: pi.images().iter().map(|&v| n + 1 - v).collect(),
    }
}

/// Reverses the order of the rows: `pi'(i) = pi(n + 1 - i)`.
///
/// The diagonal X-ray of `pi'` equals the antidiagonal X-ray of `pi` entry
/// by entry.
pub fn reverse_row_order(pi: &Permutation) -> Permutation {
    Permutation {
        images: pi.images().iter().rev().copied().collect(),
    }
}

pub fn characteristic_of_xray(x: &XRay) -> Result<Characteristic> {
    let counts: Vec<u64> = x
        .sums()
        .iter()
        .enumerate()
        .map(|(k, v)| rational::to_u64(v).ok_or(Error::NonIntegerXRay { index: k + 1 }))
        .collect::<Result<_>>()?;
    Characteristic::new(characteristic_of_counts(&counts))
}

/// Toeplitz characteristic `l_t(pi)`.
pub fn toeplitz_characteristic(pi: &Permutation) -> Characteristic {
    Characteristic {
        indices: characteristic_of_counts(&diagonal_counts(pi.images())),
    }
}

/// Hankel characteristic `l_h(pi)`.
pub fn hankel_characteristic(pi: &Permutation) -> Characteristic {
    Characteristic {
        indices: characteristic_of_counts(&antidiagonal_counts(pi.images())),
    }
}

pub fn is_binary(x: &XRay) -> bool {
    x.sums()
        .iter()
        .all(|v| v.is_zero() || v == &rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn xray(v: &[u64]) -> XRay {
        XRay::from_counts(v).unwrap()
    }

    /// Straight evaluation of the defining double sum over the matrix.
    fn diagonal_by_definition(pi: &Permutation) -> Vec<u64> {
        let n = pi.order() as i64;
        (1..2 * n)
            .map(|k| {
                let mut sum = 0;
                for i in 1..=n {
                    for j in 1..=n {
                        if i - j == n - k && pi.matrix_entry(i as usize, j as usize) {
                            sum += 1;
                        }
                    }
                }
                sum
            })
            .collect()
    }

    #[test]
    fn permutation_validation() {
        assert_eq!(Permutation::new(vec![]), Err(Error::EmptyOrder));
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert_eq!(perm(&[3, 2, 4, 1]).inverse(), perm(&[4, 2, 1, 3]));
    }

    #[test]
    fn diagonal_xray_examples() {
        assert_eq!(
            diagonal_xray(&perm(&[3, 2, 4, 1])),
            xray(&[1, 0, 0, 1, 1, 1, 0])
        );
        assert_eq!(diagonal_xray(&perm(&[1])), xray(&[1]));
        assert_eq!(diagonal_xray(&perm(&[3, 2, 1])), xray(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn antidiagonal_xray_examples() {
        assert_eq!(antidiagonal_xray(&perm(&[1])), xray(&[1]));
        assert_eq!(
            antidiagonal_xray(&perm(&[3, 2, 4, 1])),
            xray(&[0, 0, 2, 1, 0, 1, 0])
        );
        assert_eq!(antidiagonal_xray(&perm(&[2, 1])), xray(&[0, 2, 0]));
    }

    #[test]
    fn reverse_rows_examples() {
        assert_eq!(reverse_rows(&perm(&[1])), perm(&[1]));
        let rev = reverse_rows(&perm(&[3, 2, 4, 1]));
        assert_eq!(rev, perm(&[2, 3, 1, 4]));
        assert_eq!(diagonal_xray(&rev), xray(&[0, 1, 0, 1, 2, 0, 0]));
        assert_eq!(
            diagonal_xray(&rev),
            antidiagonal_xray(&perm(&[3, 2, 4, 1])).reversed()
        );
        let flipped = reverse_row_order(&perm(&[3, 2, 4, 1]));
        assert_eq!(flipped, perm(&[1, 4, 2, 3]));
        assert_eq!(
            diagonal_xray(&flipped),
            antidiagonal_xray(&perm(&[3, 2, 4, 1]))
        );
        assert_eq!(reverse_rows(&perm(&[1, 2])), perm(&[2, 1]));
    }

    #[test]
    fn characteristic_examples() {
        let c = |v: &[u64]| characteristic_of_xray(&xray(v)).unwrap();
        assert_eq!(c(&[1, 0, 0, 1, 1, 1, 0]).indices(), &[1, 4, 5, 6]);
        assert_eq!(c(&[0, 0, 3, 0, 0]).indices(), &[3, 3, 3]);
        assert_eq!(c(&[1, 0, 1, 0, 1]).indices(), &[1, 3, 5]);
    }

    #[test]
    fn characteristic_rejects_fractions() {
        let half = rational::parse_rational("1/2").unwrap();
        let x = XRay::new(vec![half.clone(), rational::one(), half]).unwrap();
        assert_eq!(
            characteristic_of_xray(&x),
            Err(Error::NonIntegerXRay { index: 1 })
        );
    }

    #[test]
    fn binary_examples() {
        assert!(is_binary(&xray(&[1, 0, 0, 1, 1, 1, 0])));
        assert!(!is_binary(&xray(&[0, 0, 3, 0, 0])));
        assert!(!is_binary(&xray(&[0, 0, 2, 1, 0, 1, 0])));
    }

    #[test]
    fn xray_validation() {
        assert!(XRay::from_counts(&[1, 0]).is_err());
        assert!(XRay::from_counts(&[1, 0, 0]).is_err());
        assert!(XRay::new(vec![
            rational::from_int(-1),
            rational::from_int(3),
            rational::zero()
        ])
        .is_err());
        assert_eq!(XRay::from_counts(&[]), Err(Error::EmptyOrder));
    }

    #[test]
    fn characteristic_validation() {
        assert!(Characteristic::new(vec![2, 1]).is_err());
        assert!(Characteristic::new(vec![1, 4]).is_err());
        assert!(Characteristic::new(vec![0]).is_err());
        let c = Characteristic::new(vec![1, 3]).unwrap();
        assert_eq!(c.to_counts(), vec![1, 0, 1]);
    }

    #[test]
    fn example_matrix_layout() {
        // Row 1 holds its one in column 3; that is the t4 cell of the displayed matrix.
        let pi = perm(&[3, 2, 4, 1]);
        assert!(pi.matrix_entry(1, 3));
        assert!(pi.matrix_entry(4, 1));
        assert!(!pi.matrix_entry(1, 1));
    }

    #[test]
    fn exhaustive_small_orders() {
        for n in 1..=6 {
            for images in (1..=n).permutations(n) {
                let pi = perm(&images);
                let d = diagonal_xray(&pi);
                let a = antidiagonal_xray(&pi);
                assert_eq!(d.counts().unwrap(), diagonal_by_definition(&pi));
                assert_eq!(d.counts().unwrap().iter().sum::<u64>(), n as u64);
                assert_eq!(a.counts().unwrap().iter().sum::<u64>(), n as u64);
                let rev = reverse_rows(&pi);
                assert_eq!(diagonal_xray(&rev), a.reversed());
                assert_eq!(antidiagonal_xray(&rev), d.reversed());
                assert_eq!(reverse_rows(&rev), pi);
                let flipped = reverse_row_order(&pi);
                assert_eq!(diagonal_xray(&flipped), a);
                assert_eq!(antidiagonal_xray(&flipped), d);
                assert_eq!(reverse_row_order(&flipped), pi);
                let c = characteristic_of_xray(&d).unwrap();
                assert_eq!(c.order(), n);
                assert!(c.indices().iter().all(|&k| (1..=2 * n - 1).contains(&k)));
                assert_eq!(c, toeplitz_characteristic(&pi));
                assert_eq!(
                    characteristic_of_xray(&a).unwrap(),
                    hankel_characteristic(&pi)
                );
            }
        }
    }

    #[test]
    fn json_shapes() {
        let pi: Permutation = serde_json::from_str("[3,2,4,1]").unwrap();
        assert_eq!(serde_json::to_string(&pi).unwrap(), "[3,2,4,1]");
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
        let x: XRay = serde_json::from_str(r#"["1/2", 1, "1/2"]"#).unwrap();
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"["1/2",1,"1/2"]"#);
        assert!(serde_json::from_str::<XRay>("[1,1]").is_err());
        let c: Characteristic = serde_json::from_str("[1,4,5,6]").unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,4,5,6]");
    }
}
