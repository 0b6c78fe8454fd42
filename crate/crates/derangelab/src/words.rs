//! Word parsing and printing shared by permutations, subexcedant functions
//! and biderangements.
//!
//! Words print as comma-free digit strings while every letter fits in one
//! digit (e.g. `2135764`), and comma-separated otherwise (e.g. `2,10,1,...`).

use crate::error::{Error, Result};

/// Parse a word in either digit-string or comma-separated form.
pub(crate) fn parse_word(kind: &'static str, s: &str) -> Result<Vec<usize>> {
    let invalid = |reason: String| Error::InvalidWord {
        kind,
        word: s.to_string(),
        reason,
    };
    if s.is_empty() {
        return Err(invalid("empty word".into()));
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("\"{part}\" is not a positive integer")))
                    .and_then(|v| {
                        if v == 0 {
                            Err(invalid("letters are 1-based, found 0".into()))
                        } else {
                            Ok(v)
                        }
                    })
            })
            .collect()
    } else {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as usize),
                _ => Err(invalid(format!("\"{c}\" is not a digit in 1..=9"))),
            })
            .collect()
    }
}

/// Print a word: digits run together when all letters are single-digit.
pub(crate) fn format_word(word: &[usize]) -> String {
    if word.iter().all(|&v| v <= 9) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        word.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Number of inversions of an arbitrary word: pairs `i < j` with
/// `w(i) > w(j)` (strict).
pub(crate) fn inversions(word: &[usize]) -> u64 {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// Lexicographic successor in place; returns `false` once the word is the
/// last arrangement. Works for multisets as well, yielding each distinct
/// arrangement exactly once.
pub(crate) fn next_arrangement(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
