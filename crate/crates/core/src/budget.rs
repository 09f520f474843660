//! Enumeration budgets.
//!
//! Every exhaustive operation (frames on `n` worlds, valuations of a frame,
//! mirror reductions) checks the size of the space it is about to walk
//! against a single cap before starting.

use thiserror::Error;

/// Environment variable overriding the default cap.
pub const BUDGET_ENV: &str = "RIML_BUDGET";

pub const DEFAULT_MAX_ENUMERATION: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_enumeration: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("budget exceeded: enumerating {what} needs 2^{log2_required} steps, limit is {limit}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub log2_required: u32,
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_enumeration: DEFAULT_MAX_ENUMERATION,
        }
    }
}

impl Budget {
    pub fn new(max_enumeration: u64) -> Self {
        Budget { max_enumeration }
    }

    /// Default budget, overridden by `RIML_BUDGET` when it holds a number.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    /// Checks that a space of `2^log2` elements fits.
    pub fn check_pow2(&self, what: &'static str, log2: u32) -> Result<(), BudgetExceeded> {
        let fits = log2 < 64 && (1u64 << log2) <= self.max_enumeration;
        if fits {
            Ok(())
        } else {
            Err(BudgetExceeded {
                what,
                log2_required: log2,
                limit: self.max_enumeration,
            })
        }
    }
}
