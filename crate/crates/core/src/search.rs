//! Node budgets and tri-state results for the exact backtracking searches.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

/// Cap on the number of search nodes; `0` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchBudget(pub u64);

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget(0);

    pub fn nodes(limit: u64) -> Self {
        SearchBudget(limit)
    }

    pub fn is_unlimited(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Found,
    None,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<W> {
    Found(W),
    /// The search space was exhausted without a witness.
    ProvenNone,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<W> {
    pub outcome: Outcome<W>,
    pub nodes_explored: u64,
}

impl<W> SearchResult<W> {
    pub fn status(&self) -> SearchStatus {
        match self.outcome {
            Outcome::Found(_) => SearchStatus::Found,
            Outcome::ProvenNone => SearchStatus::None,
            Outcome::BudgetExhausted => SearchStatus::Budget,
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match &self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> SearchResult<V> {
        SearchResult {
            outcome: match self.outcome {
                Outcome::Found(w) => Outcome::Found(f(w)),
                Outcome::ProvenNone => Outcome::ProvenNone,
                Outcome::BudgetExhausted => Outcome::BudgetExhausted,
            },
            nodes_explored: self.nodes_explored,
        }
    }
}

/// `{"status": "found"|"none"|"budget", "witness": ..., "nodes_explored": N}`;
/// `witness` is omitted unless the status is `found`.
impl<W: Serialize> Serialize for SearchResult<W> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let witness = self.witness();
        let fields = if witness.is_some() { 3 } else { 2 };
        let mut st = serializer.serialize_struct("SearchResult", fields)?;
        st.serialize_field("status", &self.status())?;
        if let Some(w) = witness {
            st.serialize_field("witness", w)?;
        }
        st.serialize_field("nodes_explored", &self.nodes_explored)?;
        st.end()
    }
}

/// Node counter shared by the backtracking searches.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    limit: u64,
    pub(crate) explored: u64,
}

impl NodeCounter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            limit: budget.0,
            explored: 0,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.limit != 0 && self.explored >= self.limit {
            return false;
        }
        self.explored += 1;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let found = SearchResult {
            outcome: Outcome::Found(vec![1, 2]),
            nodes_explored: 5,
        };
        assert_eq!(
            serde_json::to_string(&found).unwrap(),
            r#"{"status":"found","witness":[1,2],"nodes_explored":5}"#
        );
        let none: SearchResult<Vec<u8>> = SearchResult {
            outcome: Outcome::ProvenNone,
            nodes_explored: 9,
        };
        assert_eq!(
            serde_json::to_string(&none).unwrap(),
            r#"{"status":"none","nodes_explored":9}"#
        );
    }

    #[test]
    fn counter_respects_limit() {
        let mut c = NodeCounter::new(SearchBudget::nodes(2));
        assert!(c.tick());
        assert!(c.tick());
        assert!(!c.tick());
        let mut u = NodeCounter::new(SearchBudget::UNLIMITED);
        for _ in 0..1000 {
            assert!(u.tick());
        }
    }
}
