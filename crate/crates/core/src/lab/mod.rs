//! Exhaustive checks of the Skolem and X-ray conjectures at small orders.
//!
//! Every sweep is deterministic: instances are visited in lexicographic
//! order, tallies are kept in sorted maps, and the first discrepancy found
//! becomes the report's witness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::search::SearchBudget;

mod conjectures;
pub mod enumerate;
mod recognize;
mod score;

pub use conjectures::{
    binary_characteristic_predicted, enumerate_binary_toeplitz_xrays, extremal_skolem_sets,
    recheck, verify_conjecture_1, verify_conjecture_2, verify_conjecture_2_multisets,
    verify_conjecture_3, verify_conjecture_4,
};
pub use recognize::{count_permutations_with_characteristic, recognize_xray};
pub use score::{
    count_score_vectors, enumerate_score_vectors, enumerate_score_vectors_bruteforce, ScoreVector,
    BRUTE_FORCE_CAP,
};

pub const DEFAULT_MAX_ORDER: usize = 8;

/// Caps for the exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabConfig {
    /// Largest `n` any sweep will accept.
    pub max_order: usize,
    /// Node budget for each individual solver call.
    pub budget: SearchBudget,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            budget: SearchBudget::UNLIMITED,
        }
    }
}

impl LabConfig {
    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if n > self.max_order {
            return Err(Error::CapExceeded {
                n,
                cap: self.max_order,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConjectureId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl ConjectureId {
    pub fn from_number(k: u8) -> Option<Self> {
        Some(match k {
            1 => Self::C1,
            2 => Self::C2,
            3 => Self::C3,
            4 => Self::C4,
            5 => Self::C5,
            6 => Self::C6,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Verified,
    Counterexample,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture_id: ConjectureId,
    pub order: usize,
    pub status: ReportStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<BTreeMap<String, u64>>,
}

impl ConjectureReport {
    pub fn count(&self, name: &str) -> Option<u64> {
        self.counts.as_ref()?.get(name).copied()
    }
}

/// Accumulates tallies for one sweep.
pub(crate) struct Sweep {
    id: ConjectureId,
    order: usize,
    counts: BTreeMap<String, u64>,
    witness: Option<Value>,
    discrepancies: u64,
    exhausted: u64,
}

impl Sweep {
    pub(crate) fn new(id: ConjectureId, order: usize) -> Self {
        Self {
            id,
            order,
            counts: BTreeMap::new(),
            witness: None,
            discrepancies: 0,
            exhausted: 0,
        }
    }

    pub(crate) fn bump(&mut self, name: &str) {
        *self.counts.entry(name.to_string()).or_default() += 1;
    }

    pub(crate) fn set(&mut self, name: &str, value: u64) {
        self.counts.insert(name.to_string(), value);
    }

    pub(crate) fn discrepancy(&mut self, witness: Value) {
        self.discrepancies += 1;
        self.witness.get_or_insert(witness);
    }

    pub(crate) fn exhausted(&mut self) {
        self.exhausted += 1;
    }

    pub(crate) fn finish(mut self) -> ConjectureReport {
        self.counts
            .insert("discrepancies".into(), self.discrepancies);
        self.counts
            .insert("budget_exhausted".into(), self.exhausted);
        let status = if self.discrepancies > 0 {
            ReportStatus::Counterexample
        } else if self.exhausted > 0 {
            ReportStatus::BudgetExhausted
        } else {
            ReportStatus::Verified
        };
        ConjectureReport {
            conjecture_id: self.id,
            order: self.order,
            status,
            witness: self.witness,
            counts: Some(self.counts),
        }
    }
}
