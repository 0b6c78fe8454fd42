//! Sign-reversing involutions: the four-case map on derangement encodings,
//! the excedance-set pairing and its critical permutations, the
//! right-to-left-minima pairing and its decisive permutations, the
//! value/index conjugation, and the biderangement pairing.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::bider::Biderangement;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sef::{enumerate_sef, SubexcedantFunction};

/// Which branch of the four-case map fired.
///
/// The index is the position of the touched support element in the sorted
/// support list, so `C1(2)` reads "case one at the second-smallest support
/// value". `C2` can only ever fire with index 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// Fixed point of the involution: `f = 1 1 2 3 ... k-1 k k ... k`.
    Matchless,
    /// `f(m_i) = m_i`: unfix `m_i` down to `m_{i-1}`.
    C1(usize),
    /// `f(m_i) < m_i` with at least three preimages of 1: fix `m_i`.
    C2(usize),
    /// Chain condition holds and `f(m_{i+1}) = m_{i+1}`: unfix `m_{i+1}`.
    C3(usize),
    /// Chain condition holds and `f(m_{i+1}) < m_{i+1}`: fix `m_{i+1}`.
    C4(usize),
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Matchless => f.write_str("matchless"),
            CaseLabel::C1(i) => write!(f, "C1_{i}"),
            CaseLabel::C2(i) => write!(f, "C2_{i}"),
            CaseLabel::C3(i) => write!(f, "C3_{i}"),
            CaseLabel::C4(i) => write!(f, "C4_{i}"),
        }
    }
}

/// Full record of one application of the four-case map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTrace {
    /// The input word.
    pub input: SubexcedantFunction,
    /// The output word (equal to the input exactly when matchless).
    pub output: SubexcedantFunction,
    /// The case that fired on the input.
    pub case: CaseLabel,
    /// The case the output lands in, found by re-running detection.
    pub image_case: CaseLabel,
    /// The position whose letter changed, when one did.
    pub touched_position: Option<usize>,
}

/// True iff `f = 1 1 2 3 ... k-1 k k ... k` for some `1 <= k <= n-1`.
pub fn is_matchless(f: &SubexcedantFunction) -> bool {
    let n = f.n();
    if n < 2 {
        return false;
    }
    let k = f.at(n);
    if k > n - 1 {
        return false;
    }
    (2..=n).all(|i| f.at(i) == (i - 1).min(k))
}

/// The matchless word with support `[k]`.
pub fn matchless_word(n: usize, k: usize) -> Result<SubexcedantFunction> {
    if n < 2 || k == 0 || k > n - 1 {
        return Err(Error::Domain(format!(
            "matchless words need 1 <= k <= n-1, got n = {n}, k = {k}"
        )));
    }
    let word: Vec<usize> = (1..=n).map(|i| if i == 1 { 1 } else { (i - 1).min(k) }).collect();
    Ok(SubexcedantFunction::from_word(word).expect("matchless words are subexcedant"))
}

/// The single cycle `(1 k+1 k+2 ... n k k-1 ... 2)` in one-line form; this
/// is the permutation encoded by the matchless word with support `[k]`.
pub fn matchless_perm(n: usize, k: usize) -> Result<Permutation> {
    if n < 2 || k == 0 || k > n - 1 {
        return Err(Error::Domain(format!(
            "matchless permutations need 1 <= k <= n-1, got n = {n}, k = {k}"
        )));
    }
    let mut cycle = Vec::with_capacity(n);
    cycle.push(1);
    cycle.extend(k + 1..=n);
    cycle.extend((2..=k).rev());
    let mut word = vec![0usize; n];
    for idx in 0..n {
        let from = cycle[idx];
        let to = cycle[(idx + 1) % n];
        word[from - 1] = to;
    }
    Ok(Permutation::from_word(word).expect("cycle visits every point once"))
}

/// Detected case together with the move it prescribes: (label, position,
/// new letter).
fn detect_case(f: &SubexcedantFunction) -> Option<(CaseLabel, usize, usize)> {
    let n = f.n();
    let support: Vec<usize> = f.word().iter().copied().collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let len = support.len();
    let mut preimage_count = vec![0usize; n + 1];
    for &v in f.word() {
        preimage_count[v] += 1;
    }
    // f(1) = 1 always, so f^{-1}(1) = {1,2} iff f(2) = 1 and nothing else maps to 1
    let ones_exactly_one_two = f.at(2.min(n)) == 1 && preimage_count[1] == 2;
    let top = support[len - 1];
    for idx in 1..len {
        let label_index = idx + 1; // m_1 is support[0]
        let mi = support[idx];
        if f.at(mi) == mi {
            return Some((CaseLabel::C1(label_index), mi, support[idx - 1]));
        }
        // below here f(m_i) < m_i
        if preimage_count[1] >= 3 {
            return Some((CaseLabel::C2(label_index), mi, mi));
        }
        let chain = mi < top
            && ones_exactly_one_two
            && f.at(mi + 1) == mi
            && preimage_count[mi] >= 2;
        if chain {
            let next = support[idx + 1];
            if f.at(next) == next {
                return Some((CaseLabel::C3(label_index), next, mi));
            }
            return Some((CaseLabel::C4(label_index), next, next));
        }
    }
    None
}

/// Classify a derangement encoding: matchless, or the case that would fire.
pub fn classify(f: &SubexcedantFunction) -> Result<CaseLabel> {
    if !f.is_derangement_encoding() {
        return Err(Error::Domain(format!(
            "{f} does not encode a derangement"
        )));
    }
    if is_matchless(f) {
        return Ok(CaseLabel::Matchless);
    }
    match detect_case(f) {
        Some((label, _, _)) => Ok(label),
        // ruled out for derangement encodings; reaching it means the case
        // analysis above is wrong, so fail loudly rather than return input
        None => panic!("no case fired on non-matchless derangement encoding {f}"),
    }
}

/// The four-case sign-reversing involution on derangement encodings.
///
/// Matchless words are fixed; otherwise exactly one case fires at the
/// smallest eligible support index and exactly one letter changes.
pub fn psi(f: &SubexcedantFunction) -> Result<PsiTrace> {
    if !f.is_derangement_encoding() {
        return Err(Error::Domain(format!(
            "{f} does not encode a derangement"
        )));
    }
    if is_matchless(f) {
        return Ok(PsiTrace {
            input: f.clone(),
            output: f.clone(),
            case: CaseLabel::Matchless,
            image_case: CaseLabel::Matchless,
            touched_position: None,
        });
    }
    let (case, position, letter) = detect_case(f)
        .unwrap_or_else(|| panic!("no case fired on non-matchless derangement encoding {f}"));
    let output = f.with_entry(position, letter);
    let image_case = classify(&output)?;
    Ok(PsiTrace {
        input: f.clone(),
        output,
        case,
        image_case,
        touched_position: Some(position),
    })
}

/// The conjugate involution on derangements themselves: encode, apply the
/// four-case map, decode.
pub fn psi_hat(p: &Permutation) -> Result<Permutation> {
    if !p.is_derangement() {
        return Err(Error::Domain(format!("{p} is not a derangement")));
    }
    let f = SubexcedantFunction::from_perm(p);
    Ok(psi(&f)?.output.to_perm())
}

/// Which `(case, image_case)` pairs the four-case map can produce.
///
/// The shifts mirror the involution's case-by-case proof: `C1 <-> C2` at
/// the same index (only ever index 2), `C1_i <-> C4_{i-1}`, and
/// `C3 <-> C4` at the same index.
pub fn permitted_transition(case: CaseLabel, image: CaseLabel) -> bool {
    use CaseLabel::*;
    match (case, image) {
        (Matchless, Matchless) => true,
        (C1(i), C2(j)) => i == j && i == 2,
        (C1(i), C4(j)) => j + 1 == i,
        (C2(i), C1(j)) => i == j && i == 2,
        (C3(i), C4(j)) => i == j,
        (C4(i), C3(j)) => i == j,
        (C4(i), C1(j)) => j == i + 1,
        _ => false,
    }
}

/// Census of realized `(case, image_case)` pairs over all derangement
/// encodings of `[n]`.
pub fn psi_case_census(
    n: usize,
    budget: &Budget,
) -> Result<BTreeMap<(CaseLabel, CaseLabel), u64>> {
    let mut census = BTreeMap::new();
    for f in enumerate_sef(n, budget)? {
        if !f.is_derangement_encoding() {
            continue;
        }
        let trace = psi(&f)?;
        *census.entry((trace.case, trace.image_case)).or_insert(0) += 1;
    }
    Ok(census)
}

/// The excedance-preserving pairing: swap the entries of the
/// lexicographically largest swappable pair of positions `2 <= i < j <= n`.
///
/// A pair of excedances is swappable when `p(i) > j` and a pair of
/// non-excedances when `p(j) <= i`; either way the excedance set survives
/// the swap. Fixed points of the map are the critical permutations.
pub fn iota(p: &Permutation) -> Permutation {
    let n = p.n();
    let exceeds: Vec<bool> = (0..=n)
        .map(|i| i >= 1 && p.at(i) > i)
        .collect();
    for i in (2..n).rev() {
        for j in (i + 1..=n).rev() {
            let swappable = if exceeds[i] && exceeds[j] {
                p.at(i) > j
            } else if !exceeds[i] && !exceeds[j] {
                p.at(j) <= i
            } else {
                false
            };
            if swappable {
                let mut word = p.word().to_vec();
                word.swap(i - 1, j - 1);
                return Permutation::from_word_unchecked(word);
            }
        }
    }
    p.clone()
}

/// Criticality via the interleaving chain criterion: with excedances
/// `j_1 < ... < j_k` and non-excedances `i_1 < ... < i_{n-k}`,
/// `p(j_s) <= j_{s+1}` and `p(i_r) > i_{r-1}` must hold throughout.
pub fn is_critical(p: &Permutation) -> bool {
    let n = p.n();
    let exc: Vec<usize> = (1..=n).filter(|&i| p.at(i) > i).collect();
    let non: Vec<usize> = (1..=n).filter(|&i| p.at(i) <= i).collect();
    for s in 1..exc.len() {
        if p.at(exc[s - 1]) > exc[s] {
            return false;
        }
    }
    for r in 1..non.len() {
        if p.at(non[r]) <= non[r - 1] {
            return false;
        }
    }
    true
}

/// The unique critical permutation with a prescribed excedance set
/// `E ⊆ [n-1]`: excedances step up by one, non-excedances chain back.
pub fn pi_e(n: usize, excedances: &BTreeSet<usize>) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if let Some(&bad) = excedances.iter().find(|&&e| e == 0 || e >= n) {
        return Err(Error::Domain(format!(
            "excedance position {bad} outside [n-1] = [{}]",
            n - 1
        )));
    }
    let mut word = vec![0usize; n];
    let mut previous_non = 0; // i_0 = 0
    for i in 1..=n {
        if excedances.contains(&i) {
            word[i - 1] = i + 1;
        } else {
            word[i - 1] = previous_non + 1;
            previous_non = i;
        }
    }
    Ok(Permutation::from_word(word).expect("construction yields a permutation"))
}

/// Conjugation by the value flip: `zeta(p)(k) = n + 1 - p^{-1}(n + 1 - k)`.
///
/// It exchanges value statistics with index statistics under
/// `k -> n + 1 - k` and preserves inversions.
pub fn zeta(p: &Permutation) -> Permutation {
    let n = p.n();
    let inv = p.inverse();
    let word: Vec<usize> = (1..=n).map(|k| n + 1 - inv.at(n + 1 - k)).collect();
    Permutation::from_word_unchecked(word)
}

/// The right-to-left-minima pairing: swap positions `(i, i+1)` at the
/// smallest odd `i` whose swap leaves the minima value set unchanged;
/// permutations without such an `i` are decisive and stay fixed.
pub fn kappa(p: &Permutation) -> Permutation {
    let n = p.n();
    let minima = p.stats().rlm_val;
    let mut i = 1;
    while i < n {
        let mut word = p.word().to_vec();
        word.swap(i - 1, i);
        let swapped = Permutation::from_word_unchecked(word);
        if swapped.stats().rlm_val == minima {
            return swapped;
        }
        i += 2;
    }
    p.clone()
}

/// True iff `p` is fixed by [`kappa`].
pub fn is_decisive(p: &Permutation) -> bool {
    kappa(p) == *p
}

/// The unique decisive permutation whose right-to-left minima are the odd
/// integers together with a chosen set `T` of even integers: each block
/// `(j, j+1)` with `j` odd sits in order when `j + 1` is in `T` and swapped
/// otherwise; an odd trailing `n` is fixed.
pub fn decisive_from_t(n: usize, evens: &BTreeSet<usize>) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if let Some(&bad) = evens.iter().find(|&&t| t == 0 || t > n || t % 2 != 0) {
        return Err(Error::Domain(format!(
            "{bad} is not an even integer in [{n}]"
        )));
    }
    let mut word = vec![0usize; n];
    let mut j = 1;
    while j < n {
        if evens.contains(&(j + 1)) {
            word[j - 1] = j;
            word[j] = j + 1;
        } else {
            word[j - 1] = j + 1;
            word[j] = j;
        }
        j += 2;
    }
    if n % 2 == 1 {
        word[n - 1] = n;
    }
    Ok(Permutation::from_word(word).expect("construction yields a permutation"))
}

/// The biderangement pairing: swap the letters at the smallest odd position
/// `j` with `w(j) != w(j+1)`; words with all odd blocks equal (doubled
/// derangements) are fixed.
pub fn beta(w: &Biderangement) -> Biderangement {
    let len = 2 * w.n();
    let mut j = 1;
    while j < len {
        if w.at(j) != w.at(j + 1) {
            let mut word = w.word().to_vec();
            word.swap(j - 1, j);
            // positions j, j+1 share the same base letter, so the swap
            // cannot create an agreement with the base word
            return Biderangement::from_word_unchecked(word);
        }
        j += 2;
    }
    w.clone()
}
