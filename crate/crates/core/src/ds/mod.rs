//! Doubly stochastic matrices with a prescribed diagonal X-ray.
//!
//! Feasibility is an exact linear program over the `n^2` cell variables:
//! row sums, column sums and diagonal sums are equality constraints. The
//! last column constraint is implied by the others and is left out, and
//! cells on diagonals whose target is zero are fixed to zero up front.

use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::xray::{diagonal_index, Permutation, XRay};

mod birkhoff;
mod conjectures;
mod simplex;

pub use birkhoff::{birkhoff_decompose, BirkhoffDecomposition, BirkhoffTerm};
pub(crate) use conjectures::recheck_conjecture_5;
pub use conjectures::{binary_targets, verify_conjecture_5, verify_conjecture_6};

/// Square matrix of non-negative rationals whose rows and columns all sum to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSMatrix {
    rows: Vec<Vec<Rational>>,
}

impl DSMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|v| v.is_negative()) {
                return Err(Error::NotDoublyStochastic(format!(
                    "entry ({}, {}) is negative",
                    i + 1,
                    j + 1
                )));
            }
            if !row.iter().sum::<Rational>().is_one() {
                return Err(Error::NotDoublyStochastic(format!(
                    "row {} does not sum to 1",
                    i + 1
                )));
            }
        }
        for j in 0..n {
            if !rows.iter().map(|r| &r[j]).sum::<Rational>().is_one() {
                return Err(Error::NotDoublyStochastic(format!(
                    "column {} does not sum to 1",
                    j + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn from_permutation(pi: &Permutation) -> Self {
        let n = pi.order();
        let rows = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if pi.matrix_entry(i, j) {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn nonzero_count(&self) -> usize {
        self.rows.iter().flatten().filter(|v| !v.is_zero()).count()
    }
}

#[derive(Serialize, Deserialize)]
struct DSMatrixRepr {
    n: usize,
    entries: Vec<Vec<RationalCell>>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RationalCell(#[serde(with = "crate::rational::text")] Rational);

impl Serialize for DSMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DSMatrixRepr {
            n: self.order(),
            entries: self
                .rows
                .iter()
                .map(|r| r.iter().cloned().map(RationalCell).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DSMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DSMatrixRepr::deserialize(d)?;
        if repr.entries.len() != repr.n {
            return Err(de::Error::custom(format!(
                "n = {} but {} rows given",
                repr.n,
                repr.entries.len()
            )));
        }
        let rows = repr
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.0).collect())
            .collect();
        DSMatrix::new(rows).map_err(de::Error::custom)
    }
}

/// Diagonal sums of `d` (diagonal `k` holds the cells with `i - j = n - k`).
pub fn matrix_diagonal_xray(d: &DSMatrix) -> XRay {
    let n = d.order();
    let mut sums = vec![Rational::zero(); 2 * n - 1];
    for (i, row) in d.rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            sums[diagonal_index(n, i + 1, j + 1) - 1] += v;
        }
    }
    XRay::new(sums).expect("a doubly stochastic matrix has a valid x-ray")
}

/// A doubly stochastic matrix with diagonal X-ray `target`, or `None` when
/// there is none. The decision is exact.
pub fn ds_xray_feasible(target: &XRay) -> Result<Option<DSMatrix>> {
    let n = target.order();
    if target.len() != 2 * n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "x-ray of length {} for order {n}",
            target.len()
        )));
    }
    // Cells on zero diagonals are fixed at zero; the rest become variables.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if !target.get(diagonal_index(n, i, j)).is_zero() {
                cells.push((i, j));
            }
        }
    }
    let vars = cells.len();
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    let indicator = |pred: &dyn Fn(usize, usize) -> bool| -> Vec<Rational> {
        cells
            .iter()
            .map(|&(i, j)| {
                if pred(i, j) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    for r in 1..=n {
        a.push(indicator(&|i, _| i == r));
        b.push(Rational::one());
    }
    for c in 1..n {
        a.push(indicator(&|_, j| j == c));
        b.push(Rational::one());
    }
    for k in 1..2 * n {
        let t = target.get(k);
        if t.is_zero() {
            continue;
        }
        a.push(indicator(&|i, j| diagonal_index(n, i, j) == k));
        b.push(t.clone());
    }
    let Some(x) = simplex::find_feasible(&a, &b, vars) else {
        return Ok(None);
    };
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (&(i, j), v) in cells.iter().zip(x) {
        rows[i - 1][j - 1] = v;
    }
    let d = DSMatrix::new(rows).expect("LP solution is doubly stochastic");
    debug_assert_eq!(&matrix_diagonal_xray(&d), target);
    Ok(Some(d))
}

/// Characteristic prefix test on a sorted index list:
/// `a_1 + ... + a_k >= k^2` for all `k`, with equality at `k = n`.
pub fn prefix_density_holds(indices: &[usize]) -> bool {
    crate::skolem::prefix_density(indices.iter().map(|&x| x as u128), indices.len())
}

pub(crate) fn rational_from_usize(v: usize) -> Rational {
    rational::from_int(v as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn matrix(rows: &[&[&str]]) -> DSMatrix {
        DSMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|s| q(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn xray(v: &[u64]) -> XRay {
        XRay::from_counts(v).unwrap()
    }

    #[test]
    fn diagonal_xray_examples() {
        let id = matrix(&[&["1", "0"], &["0", "1"]]);
        assert_eq!(matrix_diagonal_xray(&id), xray(&[0, 2, 0]));
        let half = matrix(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        assert_eq!(
            matrix_diagonal_xray(&half),
            XRay::new(vec![q("1/2"), q("1"), q("1/2")]).unwrap()
        );
        let p = DSMatrix::from_permutation(&Permutation::new(vec![3, 2, 4, 1]).unwrap());
        assert_eq!(matrix_diagonal_xray(&p), xray(&[1, 0, 0, 1, 1, 1, 0]));
    }

    #[test]
    fn validation() {
        assert!(DSMatrix::new(vec![]).is_err());
        assert!(DSMatrix::new(vec![vec![q("1")], vec![q("1")]]).is_err());
        assert!(DSMatrix::new(vec![vec![q("1/2"), q("1/2")], vec![q("1/2"), q("1/3")]]).is_err());
        assert!(DSMatrix::new(vec![vec![q("3/2"), q("-1/2")], vec![q("-1/2"), q("3/2")]]).is_err());
        assert!(DSMatrix::new(vec![vec![q("1"), q("0")], vec![q("1"), q("0")]]).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let d = ds_xray_feasible(&xray(&[1, 0, 1])).unwrap().unwrap();
        assert_eq!(d, matrix(&[&["0", "1"], &["1", "0"]]));
        assert_eq!(ds_xray_feasible(&xray(&[1, 1, 0])).unwrap(), None);
        let target = xray(&[1, 0, 0, 1, 1, 1, 0]);
        let d = ds_xray_feasible(&target).unwrap().unwrap();
        assert_eq!(matrix_diagonal_xray(&d), target);
    }

    #[test]
    fn fractional_targets_accepted() {
        let target = XRay::new(vec![q("1/2"), q("1"), q("1/2")]).unwrap();
        let d = ds_xray_feasible(&target).unwrap().unwrap();
        assert_eq!(matrix_diagonal_xray(&d), target);
        assert_eq!(d, matrix(&[&["1/2", "1/2"], &["1/2", "1/2"]]));
    }

    #[test]
    fn json_shape() {
        let d = matrix(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"n":2,"entries":[["1/2","1/2"],["1/2","1/2"]]}"#);
        assert_eq!(serde_json::from_str::<DSMatrix>(&s).unwrap(), d);
        assert!(serde_json::from_str::<DSMatrix>(r#"{"n":1,"entries":[["1/2"]]}"#).is_err());
        assert!(serde_json::from_str::<DSMatrix>(r#"{"n":2,"entries":[[1]]}"#).is_err());
        let id: DSMatrix = serde_json::from_str(r#"{"n":1,"entries":[[1]]}"#).unwrap();
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn birkhoff_examples() {
        let p = DSMatrix::from_permutation(&Permutation::new(vec![2, 3, 1]).unwrap());
        let dec = birkhoff_decompose(&p).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.terms()[0].coeff, Rational::one());
        assert_eq!(dec.terms()[0].perm.images(), &[2, 3, 1]);

        let mix = matrix(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        let dec = birkhoff_decompose(&mix).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.terms().iter().all(|t| t.coeff == q("1/2")));
        assert_eq!(dec.reconstruct(), mix.rows());

        let third = matrix(&[
            &["1/3", "1/3", "1/3"],
            &["1/3", "1/3", "1/3"],
            &["1/3", "1/3", "1/3"],
        ]);
        let dec = birkhoff_decompose(&third).unwrap();
        assert_eq!(dec.len(), 3);
        assert!(dec.terms().iter().all(|t| t.coeff == q("1/3")));
        assert_eq!(dec.reconstruct(), third.rows());
        assert!(dec.coefficient_sum().is_one());
    }

    #[test]
    fn decomposition_json_shape() {
        let mix = matrix(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        let dec = birkhoff_decompose(&mix).unwrap();
        let s = serde_json::to_string(&dec).unwrap();
        // term order depends on the matching; only the shape is fixed
        assert!(s.starts_with(r#"[{"coeff":"1/2","perm":["#), "{s}");
        let back: BirkhoffDecomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, dec);
    }
}
