//! Birkhoff decomposition by repeated perfect-matching extraction.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::DSMatrix;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::xray::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BirkhoffTerm {
    #[serde(with = "crate::rational::text")]
    pub coeff: Rational,
    pub perm: Permutation,
}

/// `D = c_1 P_1 + ... + c_m P_m` with positive coefficients summing to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BirkhoffDecomposition {
    terms: Vec<BirkhoffTerm>,
}

impl BirkhoffDecomposition {
    pub fn terms(&self) -> &[BirkhoffTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.iter().map(|t| &t.coeff).sum()
    }

    /// `sum_j c_j P_j` as a dense matrix.
    pub fn reconstruct(&self) -> Vec<Vec<Rational>> {
        let n = self.terms.first().map_or(0, |t| t.perm.order());
        let mut m = vec![vec![Rational::zero(); n]; n];
        for t in &self.terms {
            for (i, &j) in t.perm.images().iter().enumerate() {
                m[i][j - 1] += &t.coeff;
            }
        }
        m
    }

    pub fn into_terms(self) -> Vec<BirkhoffTerm> {
        self.terms
    }
}

/// Kuhn's augmenting-path matching on the positive support. Returns the
/// column matched to each row.
fn perfect_matching(support: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    fn augment(
        row: usize,
        support: &[Vec<usize>],
        seen: &mut [bool],
        col_owner: &mut [Option<usize>],
    ) -> bool {
        for &c in &support[row] {
            if std::mem::replace(&mut seen[c], true) {
                continue;
            }
            if col_owner[c].is_none_or(|r| augment(r, support, seen, col_owner)) {
                col_owner[c] = Some(row);
                return true;
            }
        }
        false
    }
    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut seen = vec![false; n];
        if !augment(row, support, &mut seen, &mut col_owner) {
            return None;
        }
    }
    let mut row_to_col = vec![0; n];
    for (c, owner) in col_owner.into_iter().enumerate() {
        row_to_col[owner.expect("perfect matching")] = c;
    }
    Some(row_to_col)
}

pub fn birkhoff_decompose(d: &DSMatrix) -> Result<BirkhoffDecomposition> {
    let n = d.order();
    let mut rest: Vec<Vec<Rational>> = d.rows().to_vec();
    let mut terms = Vec::new();
    loop {
        let support: Vec<Vec<usize>> = rest
            .iter()
            .map(|row| (0..n).filter(|&j| row[j].is_positive()).collect())
            .collect();
        if support.iter().all(Vec::is_empty) {
            break;
        }
        let matching = perfect_matching(&support, n).ok_or_else(|| {
            Error::NotDoublyStochastic("positive support has no perfect matching".into())
        })?;
        let coeff = matching
            .iter()
            .enumerate()
            .map(|(i, &j)| rest[i][j].clone())
            .min()
            .expect("n >= 1");
        for (i, &j) in matching.iter().enumerate() {
            rest[i][j] -= &coeff;
        }
        let perm = Permutation::from_images_unchecked(matching.iter().map(|&j| j + 1).collect());
        terms.push(BirkhoffTerm { coeff, perm });
    }
    let decomposition = BirkhoffDecomposition { terms };
    debug_assert!(decomposition.coefficient_sum().is_one());
    Ok(decomposition)
}
