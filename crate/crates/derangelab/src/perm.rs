//! Permutations in one-line notation and their statistics.
//!
//! Everything is 1-based: a permutation of `[n] = {1, ..., n}` is a word
//! `p(1) p(2) ... p(n)` and both positions and values run from 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::words;

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Build a permutation from its one-line word, validating that every
    /// value of `[n]` appears exactly once.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let invalid = |reason: String| Error::InvalidWord {
            kind: "permutation",
            word: words::format_word(&word),
            reason,
        };
        if n == 0 {
            return Err(invalid("length must be at least 1".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(invalid(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(invalid(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation of `[n]`. Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on [n] with n >= 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Image of position `i` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The one-line word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut inv = vec![0; n];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// Number of inversions: pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> u64 {
        words::inversions(&self.word)
    }

    /// `(-1)^{inv}`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True iff the permutation has no fixed point.
    pub fn is_derangement(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    /// Cycle decomposition; each cycle starts at its smallest element and
    /// cycles are listed by increasing smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.at(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.at(next);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle type: the partition of `n` formed by cycle lengths, decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// All statistics in one pass.
    pub fn stats(&self) -> StatReport {
        let n = self.n();
        let mut exc_idx = BTreeSet::new();
        let mut exc_val = BTreeSet::new();
        let mut fix = BTreeSet::new();
        for i in 1..=n {
            let v = self.at(i);
            if v > i {
                exc_idx.insert(i);
                exc_val.insert(v);
            } else if v == i {
                fix.insert(i);
            }
        }
        // scanning right to left, position i is a right-to-left minimum iff
        // its value is below everything seen so far
        let mut rlm_idx = BTreeSet::new();
        let mut rlm_val = BTreeSet::new();
        let mut min_so_far = usize::MAX;
        for i in (1..=n).rev() {
            let v = self.at(i);
            if v < min_so_far {
                rlm_idx.insert(i);
                rlm_val.insert(v);
                min_so_far = v;
            }
        }
        let inv = self.inversions();
        StatReport {
            inv,
            sign: if inv.is_multiple_of(2) { 1 } else { -1 },
            exc_idx,
            exc_val,
            rlm_idx,
            rlm_val,
            fix,
            cycle_type: self.cycle_type(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&words::format_word(&self.word))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_word(words::parse_word("permutation", s)?)
    }
}

/// Every statistic of a permutation, computed together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatReport {
    /// Number of inversions.
    pub inv: u64,
    /// `(-1)^{inv}`, so `1` or `-1`.
    pub sign: i64,
    /// Excedance positions `{i : p(i) > i}`.
    pub exc_idx: BTreeSet<usize>,
    /// Excedance values `{p(i) : i excedance}`.
    pub exc_val: BTreeSet<usize>,
    /// Right-to-left minima positions: `i` with `p(i) < p(j)` for all `j > i`.
    pub rlm_idx: BTreeSet<usize>,
    /// Values at the right-to-left minima positions.
    pub rlm_val: BTreeSet<usize>,
    /// Fixed points.
    pub fix: BTreeSet<usize>,
    /// Cycle lengths, decreasing.
    pub cycle_type: Vec<usize>,
}

impl StatReport {
    /// `exc := |EXCi|`.
    pub fn exc(&self) -> usize {
        self.exc_idx.len()
    }

    /// `rlm := |RLMi|`.
    pub fn rlm(&self) -> usize {
        self.rlm_idx.len()
    }
}

/// Lexicographic stream over all of `S_n`.
pub struct SnIter {
    word: Option<Vec<usize>>,
}

impl Iterator for SnIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.word.as_mut()?;
        let current = Permutation::from_word_unchecked(word.clone());
        if !words::next_arrangement(word) {
            self.word = None;
        }
        Some(current)
    }
}

/// All permutations of `[n]` in lexicographic order of one-line words.
pub fn enumerate_sn(n: usize, budget: &Budget) -> Result<SnIter> {
    budget.check_enum(n)?;
    Ok(SnIter {
        word: Some((1..=n).collect()),
    })
}

/// All derangements of `[n]` in lexicographic order.
pub fn enumerate_derangements(
    n: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = Permutation>> {
    Ok(enumerate_sn(n, budget)?.filter(|p| p.is_derangement()))
}

/// Lexicographic stream over permutations whose fixed-point set contains a
/// prescribed set `T` (supersets allowed: the free positions carry every
/// arrangement of the free values).
pub struct WithFixedIter {
    /// Positions (equivalently values) outside `T`, increasing.
    free: Vec<usize>,
    template: Vec<usize>,
    sub: Option<Vec<usize>>,
}

impl Iterator for WithFixedIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let sub = self.sub.as_mut()?;
        let mut word = self.template.clone();
        for (slot, &choice) in sub.iter().enumerate() {
            word[self.free[slot] - 1] = self.free[choice - 1];
        }
        if !words::next_arrangement(sub) {
            self.sub = None;
        }
        Some(Permutation::from_word_unchecked(word))
    }
}

/// All permutations of `[n]` with `T ⊆ FIX(p)`, in lexicographic order.
pub fn enumerate_with_fixed(
    n: usize,
    required_fixed: &BTreeSet<usize>,
    budget: &Budget,
) -> Result<WithFixedIter> {
    budget.check_enum(n)?;
    if let Some(&bad) = required_fixed.iter().find(|&&t| t == 0 || t > n) {
        return Err(Error::Domain(format!(
            "required fixed point {bad} outside [{n}]"
        )));
    }
    let mut template = vec![0; n];
    for &t in required_fixed {
        template[t - 1] = t;
    }
    let free: Vec<usize> = (1..=n).filter(|i| !required_fixed.contains(i)).collect();
    let sub = Some((1..=free.len()).collect());
    Ok(WithFixedIter {
        free,
        template,
        sub,
    })
}
