//! Biderangements: arrangements of the doubled multiset
//! `B_n = (1,1,2,2,...,n,n)` that differ from `B_n` in every position.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::words;

/// The reference word `B_n = 1 1 2 2 ... n n`.
pub fn base_word(n: usize) -> Vec<usize> {
    (1..=n).flat_map(|v| [v, v]).collect()
}

/// A word of length `2n` over the multiset `{1,1,...,n,n}` with
/// `w(j) != B_n(j)` at every position `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biderangement {
    word: Vec<usize>,
}

impl Biderangement {
    /// Validate a word as a biderangement.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidWord {
            kind: "biderangement",
            word: words::format_word(&word),
            reason,
        };
        if word.is_empty() || !word.len().is_multiple_of(2) {
            return Err(invalid("length must be 2n with n >= 1".into()));
        }
        let n = word.len() / 2;
        let mut counts = vec![0usize; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(invalid(format!("value {v} outside 1..={n}")));
            }
            counts[v] += 1;
        }
        if let Some(v) = (1..=n).find(|&v| counts[v] != 2) {
            return Err(invalid(format!("value {v} must appear exactly twice")));
        }
        let base = base_word(n);
        if let Some(j) = (0..2 * n).find(|&j| word[j] == base[j]) {
            return Err(invalid(format!(
                "position {} agrees with the base word",
                j + 1
            )));
        }
        Ok(Biderangement { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Biderangement::from_word(word.clone()).is_ok());
        Biderangement { word }
    }

    /// The `n` with `|word| = 2n`.
    pub fn n(&self) -> usize {
        self.word.len() / 2
    }

    /// Letter at 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.word[j - 1]
    }

    /// The underlying word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Inversions, excedance values and right-to-left minima values.
    pub fn stats(&self) -> BiderStats {
        let n = self.n();
        let base = base_word(n);
        let mut exc_val: Vec<usize> = self
            .word
            .iter()
            .zip(&base)
            .filter(|(w, b)| w > b)
            .map(|(&w, _)| w)
            .collect();
        exc_val.sort_unstable();
        // a position is a right-to-left minimum iff its value is strictly
        // below everything to its right; a repeated value never qualifies at
        // its left copy, so the values form a set
        let mut rlm_val = BTreeSet::new();
        let mut min_so_far = usize::MAX;
        for j in (0..2 * n).rev() {
            if self.word[j] < min_so_far {
                rlm_val.insert(self.word[j]);
                min_so_far = self.word[j];
            }
        }
        let inv = words::inversions(&self.word);
        BiderStats {
            inv,
            sign: if inv.is_multiple_of(2) { 1 } else { -1 },
            exc_val,
            rlm_val,
        }
    }
}

impl fmt::Display for Biderangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&words::format_word(&self.word))
    }
}

impl FromStr for Biderangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Biderangement::from_word(words::parse_word("biderangement", s)?)
    }
}

/// Statistics of a biderangement word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiderStats {
    /// Inversions of the word (strict).
    pub inv: u64,
    /// `(-1)^{inv}`.
    pub sign: i64,
    /// Excedance values `{w(j) : w(j) > B_n(j)}` as a sorted multiset.
    pub exc_val: Vec<usize>,
    /// Right-to-left minima values (a set: repeats cannot both qualify).
    pub rlm_val: BTreeSet<usize>,
}

/// Lexicographic stream over all biderangements of `B_n`.
pub struct BiderIter {
    base: Vec<usize>,
    word: Option<Vec<usize>>,
}

impl Iterator for BiderIter {
    type Item = Biderangement;

    fn next(&mut self) -> Option<Biderangement> {
        loop {
            let word = self.word.as_mut()?;
            let ok = word.iter().zip(&self.base).all(|(w, b)| w != b);
            let current = if ok { Some(word.clone()) } else { None };
            if !words::next_arrangement(word) {
                self.word = None;
            }
            if let Some(w) = current {
                return Some(Biderangement::from_word_unchecked(w));
            }
        }
    }
}

/// All biderangements of `B_n`, lexicographically.
pub fn enumerate_biderangements(n: usize, budget: &Budget) -> Result<BiderIter> {
    budget.check_bider(n)?;
    Ok(BiderIter {
        base: base_word(n),
        word: Some(base_word(n)),
    })
}
