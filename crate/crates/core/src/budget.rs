//! Node budgets for exhaustive searches.
//!
//! Every enumerative routine ticks a [`Budget`] once per search node. When the
//! count passes the limit the routine returns [`Error::BudgetExceeded`]
//! instead of a partial answer. The counter is atomic so parallel workers can
//! share one budget.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default node limit, overridable per call or through the CLI.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charge `nodes` nodes.
    pub fn charge(&self, nodes: u64) -> Result<()> {
        let before = self.used.fetch_add(nodes, Ordering::Relaxed);
        if before.saturating_add(nodes) > self.limit {
            Err(self.exceeded())
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        self.charge(1)
    }

    pub fn exceeded(&self) -> Error {
        Error::BudgetExceeded { limit: self.limit, lower_bound: None }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}
