//! Work caps for brute-force enumerations.

use std::fmt;

use crate::error::{Error, Result};

/// Environment variable that overrides [`Budget::DEFAULT`].
pub const BUDGET_ENV: &str = "QPL_MAX_BUDGET";

/// Upper bound on the number of elementary work units an enumeration may
/// perform. A work unit is roughly one enumerated tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1_000_000_000);

    /// Reads `QPL_MAX_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw.trim().parse::<u64>().map(Budget).map_err(|_| {
                Error::invalid(format!("{BUDGET_ENV}={raw:?} is not an unsigned integer"))
            }),
            Err(_) => Ok(Budget::DEFAULT),
        }
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > u128::from(self.0) {
            Err(Error::SearchBudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
