//! Resource budgets for exhaustive enumeration.
//!
//! Everything in this crate certifies identities by sweeping `n!`-sized (or
//! worse) families, so every enumerator and verifier is gated by an explicit
//! budget. Exceeding a budget is an error, never a silent truncation.

use crate::error::{Error, Result};

/// Size limits for the three enumeration families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for raw permutation / subexcedant-function enumerators.
    pub max_enum_n: usize,
    /// Largest `n` for identity-verifier sweeps over `S_n` / `D_n`.
    pub max_sweep_n: usize,
    /// Largest `n` for biderangement enumeration (`(2n)!/2^n` words).
    pub max_bider_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_enum_n: 10,
            max_sweep_n: 8,
            max_bider_n: 5,
        }
    }
}

impl Budget {
    /// Budget with all three limits set to `n` (handy in tests).
    pub fn uniform(n: usize) -> Self {
        Budget {
            max_enum_n: n,
            max_sweep_n: n,
            max_bider_n: n,
        }
    }

    pub(crate) fn check_enum(&self, n: usize) -> Result<()> {
        if n < 1 || n > self.max_enum_n {
            return Err(Error::BudgetExceeded {
                what: "enumeration",
                requested: n,
                max: self.max_enum_n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_sweep(&self, n: usize) -> Result<()> {
        if n < 1 || n > self.max_sweep_n {
            return Err(Error::BudgetExceeded {
                what: "identity sweep",
                requested: n,
                max: self.max_sweep_n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_bider(&self, n: usize) -> Result<()> {
        if n < 1 || n > self.max_bider_n {
            return Err(Error::BudgetExceeded {
                what: "biderangement enumeration",
                requested: n,
                max: self.max_bider_n,
            });
        }
        Ok(())
    }
}
