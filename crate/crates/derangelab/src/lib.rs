//! A verified combinatorics engine for derangements, permutation
//! statistics and sign-reversing involutions.
//!
//! The crate has three layers:
//!
//! * **Objects and statistics** — [`Permutation`] with its
//!   [`StatReport`], [`SubexcedantFunction`] words with the encoding
//!   bijection to permutations, and [`Biderangement`] words over the
//!   doubled multiset `(1,1,2,2,...,n,n)`.
//! * **Involutions** — the four-case sign-reversing involution [`psi`] on
//!   derangement encodings and its conjugate [`psi_hat`] on derangements,
//!   the excedance pairing [`iota`] with its critical permutations, the
//!   minima pairing [`kappa`] with its decisive permutations, the
//!   conjugation [`zeta`], and the biderangement pairing [`beta`]. Each
//!   move is traceable.
//! * **Identity engine** — exact sparse integer polynomials
//!   ([`Polynomial`]) and one brute-force verifier per identity, plus
//!   probes for the open conjectures that report without asserting.
//!
//! Everything is exact; there are no floating-point numbers anywhere. All
//! sweeps are bounded by an explicit [`Budget`].
//!
//! ```
//! use derangelab::{Budget, identity};
//!
//! let budget = Budget::default();
//! let outcome = identity::main_theorem_values(5, &budget)?;
//! assert!(outcome.equal);
//! # Ok::<(), derangelab::Error>(())
//! ```

pub mod bider;
mod budget;
mod error;
pub mod identity;
pub mod involution;
pub mod perm;
pub mod poly;
pub mod sef;
mod words;

pub use bider::{base_word, enumerate_biderangements, Biderangement, BiderStats};
pub use budget::Budget;
pub use error::{Error, Result};
pub use identity::VerificationResult;
pub use involution::{
    beta, decisive_from_t, iota, is_critical, is_decisive, is_matchless, kappa, matchless_perm,
    matchless_word, pi_e, psi, psi_hat, zeta, CaseLabel, PsiTrace,
};
pub use perm::{
    enumerate_derangements, enumerate_sn, enumerate_with_fixed, Permutation, StatReport,
};
pub use poly::{Monomial, Polynomial, Var};
pub use sef::{enumerate_derangement_sef, enumerate_sef, SefProfile, SubexcedantFunction};

// The guide's code blocks double as doc-tests so the book can never drift
// from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(statistics, "../../../book/src/statistics.md");
    chapter!(encoding, "../../../book/src/encoding.md");
    chapter!(four_case_involution, "../../../book/src/four-case-involution.md");
    chapter!(sign_balance, "../../../book/src/sign-balance.md");
    chapter!(identity_engine, "../../../book/src/identity-engine.md");
    chapter!(biderangements, "../../../book/src/biderangements.md");
    chapter!(tables_and_probes, "../../../book/src/tables-and-probes.md");
}
