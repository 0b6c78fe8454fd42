//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by constructors, enumerators and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word failed validation for the requested object kind.
    #[error("invalid {kind} word \"{word}\": {reason}")]
    InvalidWord {
        /// What the word was supposed to be ("permutation", "subexcedant function", ...).
        kind: &'static str,
        /// The offending input, as given.
        word: String,
        /// Which invariant broke.
        reason: String,
    },

    /// An enumeration or sweep was requested beyond the configured budget.
    #[error("{what}: n = {requested} exceeds the configured budget ({max})")]
    BudgetExceeded {
        /// The operation family that was budgeted.
        what: &'static str,
        /// The requested size.
        requested: usize,
        /// The configured maximum.
        max: usize,
    },

    /// An argument was outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
