//! Exact truncated power-series arithmetic over arbitrary-precision integers,
//! plus the generating-function computations used by the certifier: the
//! instance-count series C(x), the avoider lower-bound series
//! (1 - mx + C(x))^{-1}, coefficient sign scans, and growth-ratio checks.
//!
//! All coefficient arithmetic is exact; nothing here rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series known exactly through `x^order`: `coeffs[n]` is the
/// coefficient of `x^n` and has length `order + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Wrap an explicit coefficient vector. Must be non-empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<TruncatedSeries> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a series needs at least the constant coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Result<TruncatedSeries> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> TruncatedSeries {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^n; zero for n beyond the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficientwise sum, padded to the larger order (missing coefficients
    /// are taken as zero).
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated at the smaller order: above that the product
    /// would depend on unknown coefficients.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse through `x^order`, by the recurrence
    /// r_0 = 1/a_0, r_n = -(a_1 r_{n-1} + ... + a_n r_0)/a_0. The constant
    /// term must be 1 or -1 so the inverse stays integral; coefficients of
    /// `self` beyond its own order are taken as zero.
    pub fn reciprocal(&self, order: usize) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        if !a0.is_one() && !(-a0).is_one() {
            return Err(Error::NotInvertible);
        }
        let mut r = Vec::with_capacity(order + 1);
        r.push(a0.clone()); // a_0^{-1} = a_0 for a unit
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for j in 1..=n.min(self.order()) {
                let aj = &self.coeffs[j];
                if !aj.is_zero() {
                    acc += aj * &r[n - j];
                }
            }
            r.push(-a0 * acc);
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    /// Plain-text dump: header `order=N m=M`, then one exact decimal
    /// coefficient per line. Stable format for golden tests.
    pub fn dump(&self, m: u32) -> String {
        let mut out = format!("order={} m={}\n", self.order(), m);
        for c in &self.coeffs {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

/// Upper-bound series for pattern instances: with `occurrences[j]` = a_j the
/// number of times variable j occurs, returns the product over j of
/// Σ_{i≥1} m^i x^{a_j i}, truncated at `order`. Its x^n coefficient bounds
/// from above the number of length-n words over m letters that are instances
/// of the pattern.
pub fn instance_series(occurrences: &[usize], m: u32, order: usize) -> Result<TruncatedSeries> {
    if occurrences.is_empty() {
        return Err(Error::InvalidArgument("occurrence vector is empty".into()));
    }
    if occurrences.contains(&0) {
        return Err(Error::InvalidArgument(
            "every variable must occur at least once".into(),
        ));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be >= 1".into()));
    }
    let mut product = TruncatedSeries::one(order);
    for &a in occurrences {
        let mut factor = TruncatedSeries::zero(order);
        let mut power = BigInt::one();
        let mut degree = a;
        while degree <= order {
            power *= m;
            factor.coeffs[degree] = power.clone();
            degree += a;
        }
        product = product.mul(&factor);
    }
    Ok(product)
}

/// The avoider lower-bound series (1 - mx + c(x))^{-1} truncated at `order`.
/// Wherever its coefficients stay non-negative they undercount the words
/// avoiding the patterns that `c` counts. `c` must vanish at orders 0 and 1
/// (only words of length >= 2 may be forbidden).
pub fn golod_series(m: u32, c: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(Error::InvalidArgument("alphabet size must be >= 1".into()));
    }
    if !c.coeff(0).is_zero() || !c.coeff(1).is_zero() {
        return Err(Error::BadCountSeries);
    }
    let mut denom = TruncatedSeries::zero(order);
    denom.coeffs[0] = BigInt::one();
    if order >= 1 {
        denom.coeffs[1] = -BigInt::from(m);
    }
    for n in 2..=order {
        denom.coeffs[n] = c.coeff(n);
    }
    denom.reciprocal(order)
}

/// Record of an exact ratio verification b_n >= λ·b_{n-1} for 1 <= n <= order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCheck {
    /// Alphabet size the series was built for.
    pub m: u32,
    /// Minimum multiplicity of the pattern the series was built for.
    pub mu: u32,
    pub lambda: BigRational,
    /// Highest n checked (the series order).
    pub verified_to: usize,
    pub passed: bool,
    /// Smallest n with q·b_n < p·b_{n-1}, when any.
    pub first_failure: Option<usize>,
}

/// Verify q·b_n >= p·b_{n-1} (λ = p/q) with exact integers for every
/// 1 <= n <= order. `m` and `mu` are carried into the record unchanged.
/// The constant coefficient must be 1.
pub fn ratio_check(s: &TruncatedSeries, lambda: &BigRational, m: u32, mu: u32) -> GrowthCheck {
    assert!(s.coeffs[0].is_one(), "ratio check requires constant coefficient 1");
    let p = lambda.numer();
    let q = lambda.denom(); // positive by the rational's normal form
    let mut first_failure = None;
    for n in 1..=s.order() {
        if q * &s.coeffs[n] < p * &s.coeffs[n - 1] {
            first_failure = Some(n);
            break;
        }
    }
    GrowthCheck {
        m,
        mu,
        lambda: lambda.clone(),
        verified_to: s.order(),
        passed: first_failure.is_none(),
        first_failure,
    }
}

/// Result of the exact closed-form growth inequality
/// m - λ >= λ·(m/(λ^μ - m))^exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormCheck {
    pub m: u32,
    pub mu: u32,
    pub lambda: BigRational,
    pub exponent: u32,
    /// m - λ.
    pub lhs: BigRational,
    /// λ·(m/(λ^μ - m))^exponent.
    pub rhs: BigRational,
    /// Whether m/(λ^μ - m) <= 1. Needed to reduce higher exponents to 2; an
    /// exponent-2 proof is only valid for patterns with more variables when
    /// this holds.
    pub side_condition: bool,
    /// Whether lhs >= rhs.
    pub holds: bool,
}

/// Exact rational power with non-negative integer exponent.
fn rational_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Evaluate the closed-form inequality exactly. When it holds at exponent 2
/// with the side condition, every series built from a pattern with at least
/// two variables, each occurring at least `mu` times over `m` letters, grows
/// by a factor >= λ at every order; that is an unconditional proof, not a
/// sampled check.
pub fn growth_closed_form(
    m: u32,
    mu: u32,
    lambda: &BigRational,
    exponent: u32,
) -> Result<ClosedFormCheck> {
    if exponent == 0 {
        return Err(Error::InvalidArgument("exponent must be >= 1".into()));
    }
    let m_rat = BigRational::from_integer(BigInt::from(m));
    let lambda_pow = rational_pow(lambda, mu);
    if lambda_pow <= m_rat {
        return Err(Error::NotApplicable(format!(
            "lambda^mu = {lambda_pow} does not exceed m = {m}; the geometric tail diverges"
        )));
    }
    let ratio = &m_rat / (&lambda_pow - &m_rat);
    let side_condition = ratio <= BigRational::one();
    let lhs = &m_rat - lambda;
    let rhs = lambda * rational_pow(&ratio, exponent);
    let holds = lhs >= rhs;
    Ok(ClosedFormCheck {
        m,
        mu,
        lambda: lambda.clone(),
        exponent,
        lhs,
        rhs,
        side_condition,
        holds,
    })
}

/// The default growth target m - 3/50, the slack the closed form is known to
/// absorb at (m, mu) = (3, 3) and (2, 4).
pub fn default_lambda(m: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(m))
        - BigRational::new(BigInt::from(3), BigInt::from(50))
}

/// Smallest consecutive-coefficient ratio min_n b_n/b_{n-1}, as an exact
/// rational. Demands strictly positive coefficients and order >= 1.
pub fn min_growth_ratio(s: &TruncatedSeries) -> Result<BigRational> {
    if s.order() == 0 {
        return Err(Error::NotApplicable(
            "series of order 0 has no consecutive coefficient pair".into(),
        ));
    }
    if let Some(n) = s.coeffs.iter().position(|c| !c.is_positive()) {
        return Err(Error::NotApplicable(format!(
            "coefficient at order {n} is not positive"
        )));
    }
    let mut best: Option<BigRational> = None;
    for n in 1..=s.order() {
        let ratio = BigRational::new(s.coeffs[n].clone(), s.coeffs[n - 1].clone());
        if best.as_ref().is_none_or(|b| ratio < *b) {
            best = Some(ratio);
        }
    }
    Ok(best.expect("order >= 1"))
}
