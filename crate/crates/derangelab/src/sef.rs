//! Subexcedant functions and their bijection with permutations.
//!
//! A subexcedant function on `[n]` is a word `f(1)...f(n)` with
//! `1 <= f(i) <= i`. It encodes the permutation
//! `(n f(n)) ... (2 f(2)) (1 f(1))`, reading the transpositions right to
//! left, and this assignment is a bijection `SEF_n -> S_n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words;

/// A word `f(1)...f(n)` with `1 <= f(i) <= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubexcedantFunction {
    word: Vec<usize>,
}

impl SubexcedantFunction {
    /// Validate a word as subexcedant.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidWord {
            kind: "subexcedant function",
            word: words::format_word(&word),
            reason,
        };
        if word.is_empty() {
            return Err(invalid("length must be at least 1".into()));
        }
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > i + 1 {
                return Err(invalid(format!(
                    "f({}) = {v} violates 1 <= f(i) <= i",
                    i + 1
                )));
            }
        }
        Ok(SubexcedantFunction { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(SubexcedantFunction::from_word(word.clone()).is_ok());
        SubexcedantFunction { word }
    }

    /// Length of the word.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `f(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The underlying word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The encoded permutation `(n f(n)) ... (2 f(2)) (1 f(1))`.
    ///
    /// The factor `(1 f(1))` acts first; a factor `(i i)` is the identity.
    pub fn to_perm(&self) -> Permutation {
        let n = self.n();
        // build up by post-composing one transposition of values at a time:
        // after step i the array holds (i f(i)) ... (1 f(1))
        let mut img: Vec<usize> = (1..=n).collect();
        let mut pos: Vec<usize> = (0..=n).collect(); // pos[v] = 1-based position of value v
        for i in 1..=n {
            let (a, b) = (i, self.at(i));
            if a != b {
                let (pa, pb) = (pos[a], pos[b]);
                img.swap(pa - 1, pb - 1);
                pos[a] = pb;
                pos[b] = pa;
            }
        }
        Permutation::from_word_unchecked(img)
    }

    /// The inverse of [`SubexcedantFunction::to_perm`]: peel entry `n`, swap
    /// the values `n` and `p(n)`, and recurse on the first `n - 1` letters.
    pub fn from_perm(p: &Permutation) -> SubexcedantFunction {
        let n = p.n();
        let mut img: Vec<usize> = p.word().to_vec();
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in img.iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut word = vec![0usize; n];
        for i in (1..=n).rev() {
            let v = img[i - 1];
            word[i - 1] = v;
            if v != i {
                // post-compose (i v): value i moves to where v was
                let (pi, pv) = (pos[i], pos[v]);
                img.swap(pi - 1, pv - 1);
                pos[i] = pv;
                pos[v] = pi;
            }
        }
        SubexcedantFunction { word }
    }

    /// Support, strict anti-excedances, fixed-point structure and
    /// right-to-left minima of the word.
    pub fn profile(&self) -> SefProfile {
        let n = self.n();
        let support: BTreeSet<usize> = self.word.iter().copied().collect();
        let aexc = (1..=n).filter(|&i| self.at(i) < i).count();
        let fixed_points: BTreeSet<usize> = (1..=n).filter(|&i| self.at(i) == i).collect();
        let multiple_fixed_points: BTreeSet<usize> = fixed_points
            .iter()
            .copied()
            .filter(|&i| (i + 1..=n).any(|j| self.at(j) == i))
            .collect();
        let mut rlm_idx = BTreeSet::new();
        let mut rlm_val = BTreeSet::new();
        let mut min_so_far = usize::MAX;
        for i in (1..=n).rev() {
            if self.at(i) < min_so_far {
                rlm_idx.insert(i);
                rlm_val.insert(self.at(i));
                min_so_far = self.at(i);
            }
        }
        SefProfile {
            support,
            aexc,
            fixed_points,
            multiple_fixed_points,
            rlm_idx,
            rlm_val,
        }
    }

    /// True iff the encoded permutation is a derangement, decided on the
    /// word alone: every fixed point of `f` must be multiple.
    pub fn is_derangement_encoding(&self) -> bool {
        let profile = self.profile();
        profile.fixed_points == profile.multiple_fixed_points
    }

    /// Copy with position `i` set to `v` (used by the case moves).
    pub(crate) fn with_entry(&self, i: usize, v: usize) -> SubexcedantFunction {
        debug_assert!(v >= 1 && v <= i);
        let mut word = self.word.clone();
        word[i - 1] = v;
        SubexcedantFunction { word }
    }
}

impl fmt::Display for SubexcedantFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&words::format_word(&self.word))
    }
}

impl FromStr for SubexcedantFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubexcedantFunction::from_word(words::parse_word("subexcedant function", s)?)
    }
}

/// Structural profile of a subexcedant function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SefProfile {
    /// The image `supp(f) = {f(i)}`.
    pub support: BTreeSet<usize>,
    /// Number of strict anti-excedances `{i : f(i) < i}`.
    pub aexc: usize,
    /// Positions with `f(i) = i`.
    pub fixed_points: BTreeSet<usize>,
    /// Fixed points `i` that recur as `f(j) = i` for some `j > i`.
    pub multiple_fixed_points: BTreeSet<usize>,
    /// Right-to-left minima positions of the word.
    pub rlm_idx: BTreeSet<usize>,
    /// Right-to-left minima values of the word.
    pub rlm_val: BTreeSet<usize>,
}

/// Lexicographic stream over `SEF_n` (an odometer with digit `i` running
/// over `1..=i`).
pub struct SefIter {
    word: Option<Vec<usize>>,
}

impl Iterator for SefIter {
    type Item = SubexcedantFunction;

    fn next(&mut self) -> Option<SubexcedantFunction> {
        let word = self.word.as_mut()?;
        let current = SubexcedantFunction::from_word_unchecked(word.clone());
        let mut i = word.len();
        loop {
            if i == 0 {
                self.word = None;
                break;
            }
            if word[i - 1] < i {
                word[i - 1] += 1;
                break;
            }
            word[i - 1] = 1;
            i -= 1;
        }
        Some(current)
    }
}

/// All subexcedant functions on `[n]`, lexicographically.
pub fn enumerate_sef(n: usize, budget: &Budget) -> Result<SefIter> {
    budget.check_enum(n)?;
    Ok(SefIter {
        word: Some(vec![1; n]),
    })
}

/// The set `DF_n`: subexcedant functions encoding derangements.
pub fn enumerate_derangement_sef(
    n: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = SubexcedantFunction>> {
    Ok(enumerate_sef(n, budget)?.filter(|f| f.is_derangement_encoding()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_sn;

    fn sef(s: &str) -> SubexcedantFunction {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(vals: &[usize]) -> BTreeSet<usize> {
        vals.iter().copied().collect()
    }

    #[test]
    fn worked_example_both_ways() {
        assert_eq!(sef("112435487").to_perm(), perm("612935487"));
        assert_eq!(
            SubexcedantFunction::from_perm(&perm("612935487")),
            sef("112435487")
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(sef("11").to_perm(), perm("21"));
        assert_eq!(SubexcedantFunction::from_perm(&perm("21")), sef("11"));
        for n in 1..=6 {
            let id_sef = SubexcedantFunction::from_word((1..=n).collect()).unwrap();
            assert_eq!(id_sef.to_perm(), Permutation::identity(n));
            assert_eq!(
                SubexcedantFunction::from_perm(&Permutation::identity(n)),
                id_sef
            );
        }
    }

    #[test]
    fn validation() {
        assert!("131".parse::<SubexcedantFunction>().is_err());
        assert!("121".parse::<SubexcedantFunction>().is_ok());
        assert!("".parse::<SubexcedantFunction>().is_err());
    }

    #[test]
    fn profile_support_example() {
        assert_eq!(sef("112352").profile().support, set(&[1, 2, 3, 5]));
    }

    #[test]
    fn profile_fixed_points() {
        let p = sef("112435487").profile();
        assert_eq!(p.fixed_points, set(&[1, 4, 8]));
        assert_eq!(p.multiple_fixed_points, set(&[1, 4]));
    }

    #[test]
    fn profile_constant_one() {
        for n in 1..=8 {
            let f = SubexcedantFunction::from_word(vec![1; n]).unwrap();
            let p = f.profile();
            assert_eq!(p.support, set(&[1]));
            assert_eq!(p.aexc, n - 1);
            assert_eq!(p.fixed_points, set(&[1]));
        }
    }

    #[test]
    fn derangement_encoding_examples() {
        assert!(!sef("112435487").is_derangement_encoding());
        assert!(sef("11").is_derangement_encoding());
        assert!(sef("1123456789").is_derangement_encoding());
    }

    #[test]
    fn enumeration_counts() {
        let budget = Budget::default();
        assert_eq!(enumerate_sef(4, &budget).unwrap().count(), 24);
        assert_eq!(enumerate_derangement_sef(4, &budget).unwrap().count(), 9);
        let df2: Vec<String> = enumerate_derangement_sef(2, &budget)
            .unwrap()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(df2, vec!["11"]);
    }

    #[test]
    fn round_trip_exhaustive_small() {
        let budget = Budget::default();
        for n in 1..=6 {
            for f in enumerate_sef(n, &budget).unwrap() {
                assert_eq!(SubexcedantFunction::from_perm(&f.to_perm()), f);
            }
            for p in enumerate_sn(n, &budget).unwrap() {
                assert_eq!(SubexcedantFunction::from_perm(&p).to_perm(), p);
            }
        }
    }

    #[test]
    fn from_perm_matches_literal_recursion() {
        // the iterative implementation must agree with the textbook
        // recursion: f(n) = p(n), then recurse on (n p(n)) o p restricted
        fn recursive(p: &Permutation) -> Vec<usize> {
            let n = p.n();
            if n == 1 {
                return vec![1];
            }
            let last = p.at(n);
            // (n p(n)) o p: swap the values n and p(n) in the word, after
            // which position n holds n and can be dropped
            let mut word: Vec<usize> = p.word().to_vec();
            for v in word.iter_mut() {
                if *v == n {
                    *v = last;
                } else if *v == last {
                    *v = n;
                }
            }
            word.pop();
            let sub = Permutation::from_word(word).unwrap();
            let mut f = recursive(&sub);
            f.push(last);
            f
        }
        let budget = Budget::default();
        for n in 1..=6 {
            for p in enumerate_sn(n, &budget).unwrap() {
                assert_eq!(
                    SubexcedantFunction::from_perm(&p).word(),
                    recursive(&p).as_slice(),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn derangement_sef_count_matches_derangements() {
        let budget = Budget::default();
        for n in 2..=7 {
            let by_sef = enumerate_derangement_sef(n, &budget).unwrap().count();
            let by_perm = crate::perm::enumerate_derangements(n, &budget)
                .unwrap()
                .count();
            assert_eq!(by_sef, by_perm, "n = {n}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_sef() -> impl Strategy<Value = SubexcedantFunction> {
            (1usize..=12)
                .prop_flat_map(|n| (1..=n).map(|i| 1..=i).collect::<Vec<_>>())
                .prop_map(|word| SubexcedantFunction::from_word(word).unwrap())
        }

        proptest! {
            #[test]
            fn encode_decode_round_trip(f in arb_sef()) {
                prop_assert_eq!(SubexcedantFunction::from_perm(&f.to_perm()), f);
            }

            #[test]
            fn support_complements_excedance_values(f in arb_sef()) {
                let n = f.n();
                let stats = f.to_perm().stats();
                let profile = f.profile();
                let complement: BTreeSet<usize> =
                    (1..=n).filter(|v| !profile.support.contains(v)).collect();
                prop_assert_eq!(stats.exc_val, complement);
                prop_assert_eq!(stats.sign == 1, profile.aexc % 2 == 0);
            }
        }
    }
}
