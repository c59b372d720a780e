use num_traits::Zero;
use serde_json::{json, Value};

use super::{
    birkhoff_decompose, ds_xray_feasible, matrix_diagonal_xray, prefix_density_holds,
    rational_from_usize, BirkhoffTerm,
};
use crate::error::{Error, Result};
use crate::lab::enumerate::increasing_sets;
use crate::lab::{recognize_xray, ConjectureId, ConjectureReport, LabConfig, Sweep};
use crate::rational::Rational;
use crate::search::Outcome;
use crate::xray::{characteristic_of_counts, diagonal_counts, XRay};

/// Every binary vector of length `2n - 1` with exactly `n` ones, paired with
/// its support, in lexicographic order of the support.
pub fn binary_targets(n: usize) -> impl Iterator<Item = (Vec<usize>, XRay)> {
    let len = 2 * n - 1;
    increasing_sets(n, len as u64).map(move |support| {
        let mut counts = vec![0u64; len];
        for &k in &support {
            counts[k as usize - 1] = 1;
        }
        let support = support.into_iter().map(|k| k as usize).collect();
        (support, XRay::from_counts_unchecked(&counts))
    })
}

fn prefix_sums(indices: &[usize]) -> Vec<usize> {
    indices
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// `sum_j c_j (a^j_1 + ... + a^j_k)` for `k = 1..=n`, where `a^j` is the
/// Toeplitz characteristic of the `j`-th permutation.
fn weighted_prefix_sums(terms: &[BirkhoffTerm]) -> Vec<Rational> {
    let n = terms.first().map_or(0, |t| t.perm.order());
    let mut out = vec![Rational::zero(); n];
    for t in terms {
        let lt = characteristic_of_counts(&diagonal_counts(t.perm.images()));
        for (slot, s) in out.iter_mut().zip(prefix_sums(&lt)) {
            *slot += &t.coeff * rational_from_usize(s);
        }
    }
    out
}

/// Binary targets: the LP accepts exactly the vectors whose support
/// satisfies the prefix bounds. For each accepted target the returned matrix
/// is decomposed and the averaging argument behind the bounds is replayed.
pub fn verify_conjecture_5(n: usize, cfg: &LabConfig) -> Result<ConjectureReport> {
    cfg.check(n)?;
    let mut sweep = Sweep::new(ConjectureId::C5, n);
    for (support, target) in binary_targets(n) {
        sweep.bump("targets");
        let density = prefix_density_holds(&support);
        if density {
            sweep.bump("density");
        }
        let solution = ds_xray_feasible(&target)?;
        if solution.is_some() {
            sweep.bump("lp_feasible");
        }
        if density != solution.is_some() {
            sweep.discrepancy(json!({
                "kind": "decision",
                "target": target,
                "lp_feasible": solution.is_some(),
                "density": density,
            }));
        }
        let Some(d) = solution else { continue };
        if matrix_diagonal_xray(&d) != target {
            sweep.discrepancy(json!({"kind": "residual", "target": target, "matrix": d}));
            continue;
        }
        let decomposition = birkhoff_decompose(&d)?;
        sweep.bump("decompositions");
        for t in decomposition.terms() {
            let lt = characteristic_of_counts(&diagonal_counts(t.perm.images()));
            if !prefix_density_holds(&lt) {
                sweep.discrepancy(json!({
                    "kind": "necessity",
                    "target": target,
                    "permutation": t.perm,
                }));
            }
        }
        let weighted = weighted_prefix_sums(decomposition.terms());
        let own = prefix_sums(&support);
        let mut identity_holds = true;
        for (k, (w, &s)) in weighted.iter().zip(&own).enumerate() {
            let k = k + 1;
            if *w < rational_from_usize(k * k) {
                sweep.discrepancy(json!({
                    "kind": "convex_bound",
                    "target": target,
                    "k": k,
                    "terms": decomposition.terms(),
                }));
            }
            if *w != rational_from_usize(s) {
                identity_holds = false;
            }
        }
        sweep.bump(if identity_holds {
            "prefix_identity_holds"
        } else {
            "prefix_identity_strict"
        });
    }
    Ok(sweep.finish())
}

/// Binary targets: the LP is feasible exactly when a permutation has the
/// same diagonal X-ray.
pub fn verify_conjecture_6(n: usize, cfg: &LabConfig) -> Result<ConjectureReport> {
    cfg.check(n)?;
    let mut sweep = Sweep::new(ConjectureId::C6, n);
    for (_, target) in binary_targets(n) {
        sweep.bump("targets");
        let lp = ds_xray_feasible(&target)?.is_some();
        if lp {
            sweep.bump("lp_feasible");
        }
        let perm = match recognize_xray(&target, cfg.budget)?.outcome {
            Outcome::Found(_) => true,
            Outcome::ProvenNone => false,
            Outcome::BudgetExhausted => {
                sweep.exhausted();
                continue;
            }
        };
        if perm {
            sweep.bump("permutation_feasible");
        }
        if lp != perm {
            sweep.discrepancy(json!({
                "target": target,
                "lp_feasible": lp,
                "permutation": perm,
            }));
        }
    }
    Ok(sweep.finish())
}

pub(crate) fn recheck_conjecture_5(w: &Value) -> Result<bool> {
    let bad = || Error::Parse {
        what: "witness",
        input: w.to_string(),
    };
    let target: XRay =
        serde_json::from_value(w.get("target").cloned().ok_or_else(bad)?).map_err(|_| bad())?;
    match w.get("kind").and_then(Value::as_str) {
        Some("decision") => {
            let support = target.support();
            Ok(ds_xray_feasible(&target)?.is_some() != prefix_density_holds(&support))
        }
        Some("residual") => Ok(match ds_xray_feasible(&target)? {
            Some(d) => matrix_diagonal_xray(&d) != target,
            None => false,
        }),
        Some("necessity") => {
            let pi: crate::xray::Permutation =
                serde_json::from_value(w.get("permutation").cloned().ok_or_else(bad)?)
                    .map_err(|_| bad())?;
            let lt = characteristic_of_counts(&diagonal_counts(pi.images()));
            Ok(!prefix_density_holds(&lt))
        }
        Some("convex_bound") => {
            let terms: Vec<BirkhoffTerm> =
                serde_json::from_value(w.get("terms").cloned().ok_or_else(bad)?)
                    .map_err(|_| bad())?;
            let k = w.get("k").and_then(Value::as_u64).ok_or_else(bad)? as usize;
            let weighted = weighted_prefix_sums(&terms);
            Ok(k >= 1 && k <= weighted.len() && weighted[k - 1] < rational_from_usize(k * k))
        }
        _ => Err(bad()),
    }
}
