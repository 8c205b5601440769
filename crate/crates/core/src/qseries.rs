//! Dense univariate power series truncated at a fixed degree, and the
//! generating functions built from them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate, Constraints, Hook};

/// `sum_{i=0}^{D} c_i v^i`, with everything above degree `D` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: String,
    degree: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(var: &str, degree: usize) -> Self {
        TruncatedSeries {
            var: var.to_string(),
            degree,
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(var: &str, degree: usize) -> Self {
        Self::monomial(var, degree, 0, BigInt::one())
    }

    /// `c v^shift`, or zero if `shift > degree`.
    pub fn monomial(var: &str, degree: usize, shift: usize, c: BigInt) -> Self {
        let mut s = Self::zero(var, degree);
        if shift <= degree {
            s.coeffs[shift] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `degree`.
    pub fn from_coeffs<C: Into<BigInt>>(var: &str, degree: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut s = Self::zero(var, degree);
        for (i, c) in coeffs.into_iter().enumerate().take(degree + 1) {
            s.coeffs[i] = c.into();
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as machine integers, failing on overflow.
    pub fn to_i64_vec(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| Error::Overflow(c.to_string())))
            .collect()
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::from_coeffs(&self.var, degree, self.coeffs.iter().cloned())
    }

    fn common_degree(&self, other: &Self) -> usize {
        self.degree.min(other.degree)
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.common_degree(other);
        let mut out = self.truncate(d);
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.common_degree(other);
        let mut out = self.truncate(d);
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.common_degree(other);
        let mut out = Self::zero(&self.var, d);
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiply by `1 + sign v^a` in place.
    fn mul_binomial(&mut self, sign: i8, a: usize) {
        if a == 0 {
            let f = BigInt::from(1 + sign as i32);
            for c in &mut self.coeffs {
                *c *= &f;
            }
            return;
        }
        for i in (a..=self.degree).rev() {
            let prev = self.coeffs[i - a].clone();
            if sign > 0 {
                self.coeffs[i] += prev;
            } else {
                self.coeffs[i] -= prev;
            }
        }
    }

    /// Divide by `1 + sign v^a` in place; `a` must be positive.
    fn div_binomial(&mut self, sign: i8, a: usize) {
        for i in a..=self.degree {
            let prev = self.coeffs[i - a].clone();
            if sign > 0 {
                self.coeffs[i] -= prev;
            } else {
                self.coeffs[i] += prev;
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{a}*{}", self.var)?,
                (_, true) => write!(f, "{}^{i}", self.var)?,
                (_, false) => write!(f, "{a}*{}^{i}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.degree + 1)
    }
}

/// `(1 + sign v^exponent)^power`. Only the signs of `sign` and `power` matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub sign: i8,
    pub exponent: usize,
    pub power: i8,
}

impl ProductFactor {
    pub fn new(sign: i8, exponent: usize, power: i8) -> Self {
        ProductFactor { sign, exponent, power }
    }

    /// `(1 - v^a)^{-1}`
    pub fn geometric(a: usize) -> Self {
        Self::new(-1, a, -1)
    }
}

/// `v^shift prod (1 ± v^a)^{±1}` through degree `degree`.
pub fn expand_product(var: &str, factors: &[ProductFactor], shift: usize, degree: usize) -> Result<TruncatedSeries> {
    for f in factors {
        if f.power < 0 && f.exponent == 0 {
            return Err(Error::NonInvertibleFactor {
                sign: f.sign,
                exponent: 0,
            });
        }
    }
    let mut s = TruncatedSeries::monomial(var, degree, shift, BigInt::one());
    if shift > degree {
        return Ok(s);
    }
    for f in factors {
        if f.power > 0 {
            s.mul_binomial(f.sign, f.exponent);
        } else {
            s.div_binomial(f.sign, f.exponent);
        }
    }
    Ok(s)
}

/// `[v^2]_k = prod_{i=1}^k (1 - v^{2i})` as a factor list.
pub fn q_pochhammer_even(k: usize) -> Vec<ProductFactor> {
    (1..=k).map(|i| ProductFactor::new(-1, 2 * i, 1)).collect()
}

/// Counts partitions of each size `<= degree` meeting `constraints`.
pub fn gf_partitions(var: &str, constraints: &Constraints, degree: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(var, degree, (0..=degree).map(|n| enumerate(n, constraints).len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// `t^{kl} / prod_{i<=k}(1 - t^i) prod_{j<=l}(1 - t^j)`
    TracesN1,
    /// `u^{2kl - l^2} prod_{i<=k-l}(1 + u^{2i-1}) / prod_{i<=l}(1 - u^{2i})`, `k >= l`
    Supertraces01,
}

pub fn closed_form_series(kind: ClosedForm, hook: Hook, degree: usize) -> Result<TruncatedSeries> {
    let (k, l) = (hook.k, hook.l);
    match kind {
        ClosedForm::TracesN1 => {
            let factors: Vec<_> = (1..=k).chain(1..=l).map(ProductFactor::geometric).collect();
            expand_product("t", &factors, k * l, degree)
        }
        ClosedForm::Supertraces01 => {
            if k < l {
                return Err(Error::InvalidHook(format!(
                    "supertrace closed form needs k >= l, got ({k},{l})"
                )));
            }
            let mut factors: Vec<_> = (1..=k - l).map(|i| ProductFactor::new(1, 2 * i - 1, 1)).collect();
            factors.extend((1..=l).map(|i| ProductFactor::new(-1, 2 * i, -1)));
            expand_product("u", &factors, 2 * k * l - l * l, degree)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitIdentity {
    /// `prod_{n>=1}(1 + u^{2n-1}) = sum_k u^{k^2} / [u^2]_k`
    SelfConjugateSum,
    /// `prod_{i>=1}(1 + u^{2i-1}) = sum_i u^{i(2n+i)} prod_{t=1}^{n}(1 + u^{2t-1}) / [u^2]_i`
    ShiftedSum(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    /// First degree at which the sides differ.
    pub first_discrepancy: Option<usize>,
}

/// `prod_{n>=1}(1 + u^{2n-1})` through `degree`.
pub fn odd_distinct_product(degree: usize) -> TruncatedSeries {
    let factors: Vec<_> = (1..)
        .map(|n| 2 * n - 1)
        .take_while(|&a| a <= degree)
        .map(|a| ProductFactor::new(1, a, 1))
        .collect();
    expand_product("u", &factors, 0, degree).expect("all factors are polynomial")
}

fn limit_sum(degree: usize, n: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero("u", degree);
    let prefix: Vec<_> = (1..=n).map(|t| ProductFactor::new(1, 2 * t - 1, 1)).collect();
    for i in 0.. {
        let shift = i * (2 * n + i);
        if shift > degree {
            break;
        }
        let mut factors = prefix.clone();
        factors.extend((1..=i).map(|j| ProductFactor::new(-1, 2 * j, -1)));
        acc = acc.add(&expand_product("u", &factors, shift, degree).expect("invertible factors"));
    }
    acc
}

pub fn check_limit_identity(which: LimitIdentity, degree: usize) -> IdentityReport {
    let lhs = odd_distinct_product(degree);
    let rhs = match which {
        LimitIdentity::SelfConjugateSum => limit_sum(degree, 0),
        LimitIdentity::ShiftedSum(n) => limit_sum(degree, n),
    };
    let first_discrepancy = (0..=degree).find(|&i| lhs.coeffs[i] != rhs.coeffs[i]);
    IdentityReport {
        holds: first_discrepancy.is_none(),
        lhs,
        rhs,
        first_discrepancy,
    }
}
