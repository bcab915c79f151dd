//! Operation budgets for the exhaustive searches.
//!
//! The brute oracles and the embedding extraction enumerate exponentially
//! many candidates; a budget makes them fail loudly instead of hanging when
//! fed something beyond desk scale. The `PARTIZE_BUDGET` environment
//! variable (a raw operation count) overrides the default.

use std::cell::Cell;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 400_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("enumeration budget of {limit} operations exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// A spend-down counter of elementary enumeration steps.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    spent: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            spent: Cell::new(0),
        }
    }

    /// Default limit, overridden by `PARTIZE_BUDGET` when set.
    pub fn from_env() -> Self {
        let limit = std::env::var("PARTIZE_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Budget::new(limit)
    }

    pub fn charge(&self, amount: u64) -> Result<(), BudgetExceeded> {
        let next = self.spent.get().saturating_add(amount);
        self.spent.set(next);
        if next > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_until_exceeded() {
        let b = Budget::new(10);
        assert!(b.charge(6).is_ok());
        assert!(b.charge(4).is_ok());
        assert_eq!(b.charge(1), Err(BudgetExceeded { limit: 10 }));
        assert_eq!(b.spent(), 11);
    }
}
