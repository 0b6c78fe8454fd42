//! One verifier per identity, table and probe.
//!
//! Proven identities are certified by brute force: fold the signed monomial
//! of every object in the summation domain into an exact polynomial and
//! compare with the closed form structurally. Conjectures and open problems
//! get probes that report findings without asserting anything.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::bider::enumerate_biderangements;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{enumerate_derangements, enumerate_sn, enumerate_with_fixed};
use crate::poly::{Monomial, Polynomial, Var};

/// Outcome of checking one identity at one size.
#[derive(Debug, Clone)]
pub struct VerificationResult {
    /// Identity name (matches the CLI token).
    pub identity: String,
    /// The size the sweep ran at.
    pub n: usize,
    /// Brute-force side.
    pub lhs: Polynomial,
    /// Closed-form side.
    pub rhs: Polynomial,
    /// Structural equality of the two sides.
    pub equal: bool,
    /// Smallest monomial (graded lex) with differing coefficients.
    pub first_discrepancy: Option<(Monomial, BigInt, BigInt)>,
    /// Wall-clock time spent.
    pub elapsed: Duration,
}

impl VerificationResult {
    fn new(identity: &str, n: usize, lhs: Polynomial, rhs: Polynomial, started: Instant) -> Self {
        let first_discrepancy = lhs.first_discrepancy(&rhs);
        VerificationResult {
            identity: identity.to_string(),
            n,
            equal: first_discrepancy.is_none(),
            lhs,
            rhs,
            first_discrepancy,
            elapsed: started.elapsed(),
        }
    }
}

fn sign_term(sign: i64) -> BigInt {
    BigInt::from(sign)
}

fn global_sign(n: usize) -> i64 {
    if (n - 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed sum over derangements of `x_{RLMv} y_{EXCv}` against
/// `(-1)^{n-1} (x1..xj * y{j+1}..yn)` summed over `j`.
pub fn main_theorem_values(n: usize, budget: &Budget) -> Result<VerificationResult> {
    check_at_least(n, 2, "main-values")?;
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        let m = Monomial::x_set(&s.rlm_val).times(&Monomial::y_set(&s.exc_val));
        lhs.add_term(m, sign_term(s.sign));
    }
    let mut rhs = Polynomial::zero();
    for j in 1..n {
        let m = Monomial::x_set(1..=j).times(&Monomial::y_set(j + 1..=n));
        rhs.add_term(m, BigInt::from(global_sign(n)));
    }
    Ok(VerificationResult::new("main-values", n, lhs, rhs, started))
}

/// Index variant: `x_{RLMi} y_{EXCi}` against
/// `(-1)^{n-1} (y1..yj * x{j+1}..xn)` summed over `j`.
pub fn main_theorem_indices(n: usize, budget: &Budget) -> Result<VerificationResult> {
    check_at_least(n, 2, "main-indices")?;
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        let m = Monomial::x_set(&s.rlm_idx).times(&Monomial::y_set(&s.exc_idx));
        lhs.add_term(m, sign_term(s.sign));
    }
    let mut rhs = Polynomial::zero();
    for j in 1..n {
        let m = Monomial::y_set(1..=j).times(&Monomial::x_set(j + 1..=n));
        rhs.add_term(m, BigInt::from(global_sign(n)));
    }
    Ok(VerificationResult::new("main-indices", n, lhs, rhs, started))
}

/// Signed count of derangements with `exc = k`; the proven value is
/// `(-1)^{n-1}` for every `1 <= k <= n-1`.
pub fn mr_counting(n: usize, k: usize, budget: &Budget) -> Result<i64> {
    if n < 1 || k < 1 || k > n.saturating_sub(1) {
        return Err(Error::Domain(format!(
            "mr-count needs 1 <= k <= n-1, got n = {n}, k = {k}"
        )));
    }
    budget.check_sweep(n)?;
    let mut total = 0i64;
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        if s.exc() == k {
            total += s.sign;
        }
    }
    Ok(total)
}

/// Signed sum over all of `S_n` of `x_{EXCi}` against the product
/// `(1 - x_1) ... (1 - x_{n-1})`.
pub fn exc_sum_sn(n: usize, budget: &Budget) -> Result<VerificationResult> {
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_sn(n, budget)? {
        let s = p.stats();
        lhs.add_term(Monomial::x_set(&s.exc_idx), sign_term(s.sign));
    }
    let rhs = one_minus_x_product(1..n);
    Ok(VerificationResult::new("exc-sn", n, lhs, rhs, started))
}

/// Fixed-point-restricted variant: sum over permutations with
/// `T ⊆ FIX(p)`, against `prod_{j in E} (1 - x_j)` where `m` is the largest
/// integer outside `T` and `E = [m-1] \ T`.
pub fn exc_sum_fixed(
    n: usize,
    required_fixed: &BTreeSet<usize>,
    budget: &Budget,
) -> Result<VerificationResult> {
    budget.check_sweep(n)?;
    if let Some(&bad) = required_fixed.iter().find(|&&t| t == 0 || t > n) {
        return Err(Error::Domain(format!("fixed point {bad} outside [{n}]")));
    }
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_with_fixed(n, required_fixed, budget)? {
        let s = p.stats();
        lhs.add_term(Monomial::x_set(&s.exc_idx), sign_term(s.sign));
    }
    let rhs = match (1..=n).rev().find(|m| !required_fixed.contains(m)) {
        None => Polynomial::one(),
        Some(m) => one_minus_x_product((1..m).filter(|j| !required_fixed.contains(j))),
    };
    Ok(VerificationResult::new("exc-fixed", n, lhs, rhs, started))
}

/// Signed sum over derangements of `x_{EXCi}` against
/// `(-1)^{n-1} (x1 + x1x2 + ... + x1..x{n-1})`.
pub fn derangement_exc_mono(n: usize, budget: &Budget) -> Result<VerificationResult> {
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        lhs.add_term(Monomial::x_set(&s.exc_idx), sign_term(s.sign));
    }
    let mut rhs = Polynomial::zero();
    for j in 1..n {
        rhs.add_term(Monomial::x_set(1..=j), BigInt::from(global_sign(n)));
    }
    Ok(VerificationResult::new("der-exc", n, lhs, rhs, started))
}

/// Signed sum over all of `S_n` of `x_{RLMv}` against
/// `(prod_{odd i} x_i)(prod_{even j} (x_j - 1))`.
pub fn rlm_sum_sn(n: usize, budget: &Budget) -> Result<VerificationResult> {
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_sn(n, budget)? {
        let s = p.stats();
        lhs.add_term(Monomial::x_set(&s.rlm_val), sign_term(s.sign));
    }
    let mut rhs = Polynomial::from_monomial(Monomial::x_set((1..=n).filter(|i| i % 2 == 1)), 1);
    for j in (1..=n).filter(|j| j % 2 == 0) {
        let factor = &Polynomial::var(Var::X(j)) - &Polynomial::one();
        rhs = &rhs * &factor;
    }
    Ok(VerificationResult::new("rlm-sn", n, lhs, rhs, started))
}

/// Signed sum over derangements of `t^{rlm}` against
/// `(-1)^{n-1} (t + t^2 + ... + t^{n-1})`.
pub fn rlm_derangement_sum(n: usize, budget: &Budget) -> Result<VerificationResult> {
    budget.check_sweep(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        lhs.add_term(Monomial::t_pow(s.rlm() as u32), sign_term(s.sign));
    }
    let mut rhs = Polynomial::zero();
    for j in 1..n {
        rhs.add_term(Monomial::t_pow(j as u32), BigInt::from(global_sign(n)));
    }
    Ok(VerificationResult::new("rlm-der", n, lhs, rhs, started))
}

/// Signed sum over biderangements of `x_{EXCv} y_{RLMv}` against the
/// unsigned derangement sum with doubled excedance exponents.
pub fn biderangement_identity(n: usize, budget: &Budget) -> Result<VerificationResult> {
    budget.check_bider(n)?;
    let started = Instant::now();
    let mut lhs = Polynomial::zero();
    for w in enumerate_biderangements(n, budget)? {
        let s = w.stats();
        let m = Monomial::from_powers(s.exc_val.iter().map(|&v| (Var::X(v), 1)))
            .times(&Monomial::y_set(&s.rlm_val));
        lhs.add_term(m, sign_term(s.sign));
    }
    let mut rhs = Polynomial::zero();
    for p in enumerate_derangements(n, budget)? {
        let s = p.stats();
        let m = Monomial::from_powers(s.exc_val.iter().map(|&v| (Var::X(v), 2)))
            .times(&Monomial::y_set(&s.rlm_val));
        rhs.add_term(m, BigInt::from(1));
    }
    Ok(VerificationResult::new("bider", n, lhs, rhs, started))
}

/// Probe of the cycle-type conjecture: the signed sum of
/// `x_{RLMv} y_{EXCv}` over permutations whose shortest cycle has length at
/// least `k`. Reports sign structure, asserts nothing.
#[derive(Debug, Clone)]
pub struct ConjectureProbe {
    /// Sweep size.
    pub n: usize,
    /// Minimum cycle length.
    pub k: usize,
    /// The signed sum itself.
    pub sum: Polynomial,
    /// Every coefficient nonnegative, as printed.
    pub all_nonneg: bool,
    /// All coefficients share one sign (so the sum is a global sign away
    /// from having nonnegative coefficients).
    pub single_signed: bool,
}

/// Compute the cycle-type-restricted signed sum.
pub fn type_restricted_sum(n: usize, k: usize, budget: &Budget) -> Result<ConjectureProbe> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!(
            "conjecture probe needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    budget.check_sweep(n)?;
    let mut sum = Polynomial::zero();
    for p in enumerate_sn(n, budget)? {
        let parts = p.cycle_type();
        if *parts.last().expect("cycle type is nonempty") < k {
            continue;
        }
        let s = p.stats();
        let m = Monomial::x_set(&s.rlm_val).times(&Monomial::y_set(&s.exc_val));
        sum.add_term(m, sign_term(s.sign));
    }
    let all_nonneg = sum.all_coeffs_nonnegative();
    let single_signed = sum.is_zero() || sum.single_signed();
    Ok(ConjectureProbe {
        n,
        k,
        sum,
        all_nonneg,
        single_signed,
    })
}

/// Unsigned census over single `n`-cycles of `x_{RLMv} y_{EXCv}`.
#[derive(Debug, Clone)]
pub struct CycleCensus {
    /// Sweep size.
    pub n: usize,
    /// The census polynomial.
    pub sum: Polynomial,
    /// Number of distinct monomials (multiplicity not counted).
    pub distinct_terms: usize,
}

/// Known prefix of the distinct-term counts (OEIS A124302), `n = 1..=9`.
pub const SINGLE_CYCLE_TERM_COUNTS: [usize; 9] = [1, 1, 2, 5, 14, 41, 122, 365, 1094];

/// Compute the single-cycle census.
pub fn single_cycle_census(n: usize, budget: &Budget) -> Result<CycleCensus> {
    budget.check_sweep(n)?;
    let mut sum = Polynomial::zero();
    for p in enumerate_sn(n, budget)? {
        if p.cycles().len() != 1 || p.cycle_type() != vec![n] {
            continue;
        }
        let s = p.stats();
        let m = Monomial::x_set(&s.rlm_val).times(&Monomial::y_set(&s.exc_val));
        sum.add_term(m, BigInt::from(1));
    }
    let distinct_terms = sum.term_count();
    Ok(CycleCensus {
        n,
        sum,
        distinct_terms,
    })
}

/// One observed-versus-predicted comparison, reported without assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternCheck {
    /// Value computed from the table.
    pub observed: u64,
    /// Value the observed pattern predicts.
    pub predicted: u64,
    /// Whether they agree.
    pub matches: bool,
}

impl PatternCheck {
    fn new(observed: u64, predicted: u64) -> Self {
        PatternCheck {
            observed,
            predicted,
            matches: observed == predicted,
        }
    }
}

/// One row of the derangement right-to-left-minima table.
#[derive(Debug, Clone)]
pub struct RlmTableRow {
    /// Row size.
    pub n: usize,
    /// `a_{n,k}` for `k = 1..=n-1`.
    pub counts: Vec<u64>,
    /// `a_{n,1}` against `(n-2) a_{n-1,1} + (n-3) a_{n-2,1}` (rows `n >= 4`).
    pub first_col_recursion: Option<PatternCheck>,
    /// `a_{n,n-1}` against `(n-2) + (n-1)^2`, the formula as printed.
    pub last_col_as_printed: PatternCheck,
    /// `a_{n,n-2}` against `(n-3) + (n-2)^2`, the column the formula
    /// evidently tracks (rows `n >= 3`).
    pub next_to_last_shifted: Option<PatternCheck>,
}

/// The table `a_{n,k}` = number of derangements of `[n]` with exactly `k`
/// right-to-left minima, for `n = 2..=max_n`, with the two observed
/// patterns reported per row.
pub fn rlm_derangement_table(max_n: usize, budget: &Budget) -> Result<Vec<RlmTableRow>> {
    if max_n < 2 {
        return Err(Error::Domain(format!(
            "the table starts at n = 2, got max_n = {max_n}"
        )));
    }
    budget.check_sweep(max_n)?;
    let mut rows: Vec<RlmTableRow> = Vec::new();
    let mut first_col: Vec<u64> = Vec::new(); // a_{n,1} indexed from n = 2
    for n in 2..=max_n {
        let mut counts = vec![0u64; n - 1];
        for p in enumerate_derangements(n, budget)? {
            let k = p.stats().rlm();
            counts[k - 1] += 1;
        }
        let a_n1 = counts[0];
        let first_col_recursion = if n >= 4 {
            let predicted = (n as u64 - 2) * first_col[n - 3] + (n as u64 - 3) * first_col[n - 4];
            Some(PatternCheck::new(a_n1, predicted))
        } else {
            None
        };
        let last = counts[n - 2];
        let last_col_as_printed =
            PatternCheck::new(last, (n as u64 - 2) + (n as u64 - 1) * (n as u64 - 1));
        let next_to_last_shifted = if n >= 3 {
            let observed = counts[n - 3];
            Some(PatternCheck::new(
                observed,
                (n as u64 - 3) + (n as u64 - 2) * (n as u64 - 2),
            ))
        } else {
            None
        };
        first_col.push(a_n1);
        rows.push(RlmTableRow {
            n,
            counts,
            first_col_recursion,
            last_col_as_printed,
            next_to_last_shifted,
        });
    }
    Ok(rows)
}

/// A factorization `sign * t^a (t+1)^b (t-1)^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactoredForm {
    /// `+1` or `-1`.
    pub sign: i64,
    /// Exponent of `t`.
    pub t_power: u32,
    /// Exponent of `t + 1`.
    pub plus_power: u32,
    /// Exponent of `t - 1`.
    pub minus_power: u32,
}

impl FactoredForm {
    /// Expand back into a polynomial (used to cross-check the extraction).
    pub fn expand(&self) -> Polynomial {
        let mut out = Polynomial::from_monomial(Monomial::t_pow(self.t_power), self.sign);
        let t = Polynomial::var(Var::T);
        let plus = &t + &Polynomial::one();
        let minus = &t - &Polynomial::one();
        for _ in 0..self.plus_power {
            out = &out * &plus;
        }
        for _ in 0..self.minus_power {
            out = &out * &minus;
        }
        out
    }
}

impl fmt::Display for FactoredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        let mut factors: Vec<String> = Vec::new();
        match self.t_power {
            0 => {}
            1 => factors.push("t".into()),
            e => factors.push(format!("t^{e}")),
        }
        match self.plus_power {
            0 => {}
            1 => factors.push("(t+1)".into()),
            e => factors.push(format!("(t+1)^{e}")),
        }
        match self.minus_power {
            0 => {}
            1 => factors.push("(t-1)".into()),
            e => factors.push(format!("(t-1)^{e}")),
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Probe of the fixed-point-restricted right-to-left-minima sum.
#[derive(Debug, Clone)]
pub struct FixedRlmProbe {
    /// Sweep size.
    pub n: usize,
    /// Prescribed fixed points.
    pub fixed: BTreeSet<usize>,
    /// The signed sum of `t^{rlm}` over permutations fixing `fixed`.
    pub sum: Polynomial,
    /// Factorization as `sign * t^a (t+1)^b (t-1)^c`, when it exists.
    pub factored: Option<FactoredForm>,
}

/// Compute the probe and attempt the conjectured factorization: strip the
/// lowest power of `t`, divide out every `(t-1)` and `(t+1)`, and succeed
/// when a unit remains.
pub fn fixed_rlm_probe(
    n: usize,
    required_fixed: &BTreeSet<usize>,
    budget: &Budget,
) -> Result<FixedRlmProbe> {
    budget.check_sweep(n)?;
    if let Some(&bad) = required_fixed.iter().find(|&&t| t == 0 || t > n) {
        return Err(Error::Domain(format!("fixed point {bad} outside [{n}]")));
    }
    let mut sum = Polynomial::zero();
    for p in enumerate_with_fixed(n, required_fixed, budget)? {
        let s = p.stats();
        sum.add_term(Monomial::t_pow(s.rlm() as u32), sign_term(s.sign));
    }
    let factored = extract_factored_form(&sum);
    Ok(FixedRlmProbe {
        n,
        fixed: required_fixed.clone(),
        sum,
        factored,
    })
}

fn extract_factored_form(sum: &Polynomial) -> Option<FactoredForm> {
    use num_traits::{One, Signed, Zero};
    if sum.is_zero() {
        return None;
    }
    let coeffs = sum.as_univariate_t()?;
    let t_power = coeffs.iter().position(|c| !c.is_zero())? as u32;
    let mut rest = Polynomial::zero();
    for (k, c) in coeffs.iter().enumerate().skip(t_power as usize) {
        rest.add_term(Monomial::t_pow((k as u32) - t_power), c.clone());
    }
    let mut minus_power = 0;
    while let Some(q) = rest.div_exact_t_minus(1) {
        rest = q;
        minus_power += 1;
    }
    let mut plus_power = 0;
    while let Some(q) = rest.div_exact_t_minus(-1) {
        rest = q;
        plus_power += 1;
    }
    let unit = rest.coefficient(&Monomial::one());
    if rest.term_count() == 1 && unit.abs().is_one() {
        Some(FactoredForm {
            sign: if unit.is_negative() { -1 } else { 1 },
            t_power,
            plus_power,
            minus_power,
        })
    } else {
        None
    }
}

/// Subsets of `[n]` in lexicographic order of their sorted element lists
/// (depth-first: `{} < {1} < {1,2} < ... < {1,2,...,n} < ... < {n}`).
pub fn subsets_lex(n: usize) -> Vec<BTreeSet<usize>> {
    fn grow(prefix: &mut Vec<usize>, next: usize, n: usize, out: &mut Vec<BTreeSet<usize>>) {
        out.push(prefix.iter().copied().collect());
        for v in next..=n {
            prefix.push(v);
            grow(prefix, v + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n);
    grow(&mut Vec::new(), 1, n, &mut out);
    out
}

/// The fixed-point sets the exc-fixed verification sweeps: every subset of
/// `[n]` up to `n = 6`, the lexicographically first 50 beyond that.
pub fn exc_fixed_subjects(n: usize) -> Vec<BTreeSet<usize>> {
    let mut subjects = subsets_lex(n);
    if n >= 7 {
        subjects.truncate(50);
    }
    subjects
}

fn one_minus_x_product<I: IntoIterator<Item = usize>>(indices: I) -> Polynomial {
    let mut out = Polynomial::one();
    for j in indices {
        let factor = &Polynomial::one() - &Polynomial::var(Var::X(j));
        out = &out * &factor;
    }
    out
}

fn check_at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}
