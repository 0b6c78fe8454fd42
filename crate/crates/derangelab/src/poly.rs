//! Exact sparse multivariate polynomials over the integers.
//!
//! Variables come in three families: `x1, x2, ...`, `y1, y2, ...` and a
//! single `t`. Coefficients are arbitrary-precision integers and zero terms
//! are never stored, so equality is structural.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A variable: family (`X < Y < T`) plus a 1-based index for `X`/`Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `x_i`
    X(usize),
    /// `y_i`
    Y(usize),
    /// the single specialization variable `t`
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::T => write!(f, "t"),
        }
    }
}

/// A power product with positive exponents; the empty product is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// A single variable to the first power.
    pub fn var(v: Var) -> Self {
        Monomial::from_powers([(v, 1)])
    }

    /// Build from `(variable, exponent)` pairs; exponents accumulate and
    /// zeros are dropped.
    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    /// Product of `x_s` over a set of indices.
    pub fn x_set<I>(indices: I) -> Self
    where
        I: IntoIterator,
        I::Item: Borrow<usize>,
    {
        Monomial::from_powers(indices.into_iter().map(|i| (Var::X(*i.borrow()), 1)))
    }

    /// Product of `y_s` over a set of indices.
    pub fn y_set<I>(indices: I) -> Self
    where
        I: IntoIterator,
        I::Item: Borrow<usize>,
    {
        Monomial::from_powers(indices.into_iter().map(|i| (Var::Y(*i.borrow()), 1)))
    }

    /// `t^e`.
    pub fn t_pow(e: u32) -> Self {
        Monomial::from_powers([(Var::T, e)])
    }

    /// Exponent of a variable (0 when absent).
    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Iterate `(variable, exponent)` pairs in variable order.
    pub fn powers(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Product of two monomials.
    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

// Graded lexicographic: total degree first, then dictionary order on the
// monomials written as sorted variable words over the alphabet
// x1 < x2 < ... < y1 < ... < t. So x1 < x2, x1^2 < x1*x2, and every x
// monomial of a degree precedes every y monomial of that degree.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // unreachable at equal degree, but keep a total order
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        // the word with more copies of the shared earlier
                        // letter switches to a later letter later
                        ord => return ord.reverse(),
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.powers() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), BigInt::from(c));
        p
    }

    /// The polynomial `v`.
    pub fn var(v: Var) -> Self {
        Polynomial::from_monomial(Monomial::var(v), 1)
    }

    /// `c * m` as a polynomial.
    pub fn from_monomial(m: Monomial, c: i64) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, BigInt::from(c));
        p
    }

    /// Add `c * m`, dropping the term if the coefficient cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True iff there are no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(monomial, coefficient)` in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// True iff every coefficient is nonnegative.
    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True iff the nonzero coefficients all share one sign.
    pub fn single_signed(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
            || self.terms.values().all(|c| c.is_negative())
    }

    /// The smallest monomial (graded lex) where two polynomials disagree,
    /// with both coefficients.
    pub fn first_discrepancy(&self, other: &Polynomial) -> Option<(Monomial, BigInt, BigInt)> {
        let mut monomials: Vec<&Monomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        monomials.sort();
        monomials.dedup();
        for m in monomials {
            let a = self.coefficient(m);
            let b = other.coefficient(m);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }

    /// Replace every variable by a polynomial.
    pub fn substitute<F: Fn(Var) -> Polynomial>(&self, image: F) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(1);
            for (v, e) in m.powers() {
                let base = image(v);
                for _ in 0..e {
                    term = &term * &base;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc * c);
            }
        }
        out
    }

    /// View as a dense univariate polynomial in `t`; `None` if any other
    /// variable occurs. Index = power of `t`.
    pub fn as_univariate_t(&self) -> Option<Vec<BigInt>> {
        let mut degree = 0u32;
        for m in self.terms.keys() {
            for (v, _) in m.powers() {
                if v != Var::T {
                    return None;
                }
            }
            degree = degree.max(m.exponent(Var::T));
        }
        let mut coeffs = vec![BigInt::zero(); degree as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m.exponent(Var::T) as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// Divide by `(t - c)` exactly; `None` when there is a remainder or the
    /// polynomial is not univariate in `t`.
    pub fn div_exact_t_minus(&self, c: i64) -> Option<Polynomial> {
        let coeffs = self.as_univariate_t()?;
        if coeffs.iter().all(|x| x.is_zero()) {
            return None;
        }
        let c = BigInt::from(c);
        // synthetic division from the top coefficient down
        let mut quotient = vec![BigInt::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = BigInt::zero();
        for k in (0..coeffs.len()).rev() {
            let current = &coeffs[k] + &carry;
            if k == 0 {
                if !current.is_zero() {
                    return None;
                }
            } else {
                carry = &current * &c;
                quotient[k - 1] = current;
            }
        }
        let mut out = Polynomial::zero();
        for (k, q) in quotient.into_iter().enumerate() {
            out.add_term(Monomial::t_pow(k as u32), q);
        }
        Some(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // largest terms first, matching the usual written order
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
