//! Poincaré series `P`, `P'`, `P̄`, `P̄'` assembled from multiplicities and
//! hook Schur functions, plus the identity checks that tie the character and
//! residue routes together.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charkron::{m_bar_lambda, m_lambda, MultiplicityRecord, Route};
use crate::error::{Error, Result};
use crate::hookschur::{Alphabet, PowerSumEvaluator};
use crate::laurent::{LaurentPoly, VarTable};
use crate::partition::{partitions_up_to, Hook, Partition};
use crate::qseries::TruncatedSeries;
use crate::residue::{m_bar_prime_residue_with, m_prime_residue_with, Truncation};

/// Power series in `t1..tn, u1..um` truncated at total degree `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    vars: Arc<VarTable>,
    n: usize,
    m: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiSeries {
    pub fn zero(n: usize, m: usize, degree: usize) -> Self {
        MultiSeries {
            vars: series_vars(n, m),
            n,
            m,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Keeps the terms of `poly` of total degree `<= degree`. Exponents must
    /// be nonnegative.
    pub fn from_poly(n: usize, m: usize, degree: usize, poly: &LaurentPoly) -> Result<Self> {
        let mut s = Self::zero(n, m, degree);
        if poly.vars().len() != n + m {
            return Err(Error::VarTableMismatch);
        }
        for (e, c) in poly.terms() {
            s.add_term(e, c)?;
        }
        Ok(s)
    }

    fn add_term(&mut self, e: &[i32], c: &BigInt) -> Result<()> {
        if e.iter().any(|&a| a < 0) {
            return Err(Error::Parse(format!("negative exponent in series term {e:?}")));
        }
        let e: Vec<u32> = e.iter().map(|&a| a as u32).collect();
        if e.iter().sum::<u32>() as usize > self.degree {
            return Ok(());
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
        Ok(())
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    /// Terms ordered by total degree, then lexicographically descending.
    pub fn graded_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::VarTableMismatch);
        }
        let mut out = self.truncate(self.degree.min(other.degree));
        for (e, c) in &other.terms {
            let e: Vec<i32> = e.iter().map(|&a| a as i32).collect();
            out.add_term(&e, c)?;
        }
        Ok(out)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut out = Self::zero(self.n, self.m, degree);
        out.terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() as usize <= degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        out
    }

    /// Dense coefficient list when there is exactly one variable.
    pub fn to_univariate(&self) -> Option<TruncatedSeries> {
        if self.n + self.m != 1 {
            return None;
        }
        let name = self.vars.name(0).trim_end_matches('1').to_string();
        let mut coeffs = vec![BigInt::zero(); self.degree + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(TruncatedSeries::from_coeffs(&name, self.degree, coeffs))
    }

    /// Invariance under permuting `t`'s among themselves and `u`'s among
    /// themselves, checked on adjacent transpositions.
    pub fn is_separately_symmetric(&self) -> bool {
        let swaps = (0..self.n.saturating_sub(1)).chain((self.n..self.n + self.m).skip(1).map(|i| i - 1));
        for i in swaps {
            for (e, c) in &self.terms {
                let mut f = e.clone();
                f.swap(i, i + 1);
                if self.coefficient(&f) != *c {
                    return false;
                }
            }
        }
        true
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The coefficient of `v^1` for the variable at `index`, as a series in
    /// the remaining variables truncated one degree lower.
    pub fn linear_part(&self, index: usize) -> Self {
        let (n, m) = if index < self.n {
            (self.n - 1, self.m)
        } else {
            (self.n, self.m - 1)
        };
        let mut out = Self::zero(n, m, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[index] == 1 {
                let mut f = e.clone();
                f.remove(index);
                out.terms.insert(f, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_terms();
        if terms.is_empty() {
            write!(f, "0")?;
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{p}", self.vars.name(i))),
                }
            }
            if factors.is_empty() || a != BigInt::from(1) {
                factors.insert(0, a.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        write!(f, " + O(deg {})", self.degree + 1)
    }
}

/// Variable table `t1..tn, u1..um`.
pub fn series_vars(n: usize, m: usize) -> Arc<VarTable> {
    let names = VarTable::numbered("t", n).into_iter().chain(VarTable::numbered("u", m));
    VarTable::new(names).expect("generated names are distinct")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesMode {
    Plain,
    Prime,
    Bar,
    BarPrime,
}

impl std::str::FromStr for SeriesMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(SeriesMode::Plain),
            "prime" => Ok(SeriesMode::Prime),
            "bar" => Ok(SeriesMode::Bar),
            "barprime" | "bar_prime" => Ok(SeriesMode::BarPrime),
            _ => Err(Error::Parse(format!("unknown series mode `{s}`"))),
        }
    }
}

/// `m_lambda(k,l) - m_lambda(k-1,l-1)`; the subtrahend is 0 when `min(k,l) = 0`.
pub fn m_prime_char(lambda: &Partition, hook: Hook) -> i64 {
    let lower = hook.shrink().map_or(0, |h| m_lambda(lambda, h));
    m_lambda(lambda, hook) - lower
}

/// `m̄_lambda(k,l) - m̄_lambda(k-1,l-1)`, same convention.
pub fn m_bar_prime_char(lambda: &Partition, hook: Hook) -> i64 {
    let lower = hook.shrink().map_or(0, |h| m_bar_lambda(lambda, h));
    m_bar_lambda(lambda, hook) - lower
}

/// The coefficient of `HS_lambda(T;U)` in the series of the given mode.
/// Unprimed modes are always character-theoretic.
pub fn multiplicity(mode: SeriesMode, lambda: &Partition, hook: Hook, route: Route, trunc: Truncation) -> Result<i64> {
    match (mode, route) {
        (SeriesMode::Plain, _) => Ok(m_lambda(lambda, hook)),
        (SeriesMode::Bar, _) => Ok(m_bar_lambda(lambda, hook)),
        (SeriesMode::Prime, Route::Character) => Ok(m_prime_char(lambda, hook)),
        (SeriesMode::Prime, Route::Residue) => m_prime_residue_with(lambda, hook, trunc),
        (SeriesMode::BarPrime, Route::Character) => Ok(m_bar_prime_char(lambda, hook)),
        (SeriesMode::BarPrime, Route::Residue) => m_bar_prime_residue_with(lambda, hook, trunc),
    }
}

/// `sum_{|lambda| <= D} mult(lambda) HS_lambda(t_1..t_n; u_1..u_m)`, primed
/// multiplicities by constant-term extraction.
pub fn p_series(mode: SeriesMode, hook: Hook, n: usize, m: usize, degree: usize) -> Result<MultiSeries> {
    p_series_with(mode, hook, n, m, degree, Route::Residue)
}

pub fn p_series_with(
    mode: SeriesMode,
    hook: Hook,
    n: usize,
    m: usize,
    degree: usize,
    route: Route,
) -> Result<MultiSeries> {
    let vars = series_vars(n, m);
    let t = Alphabet::variables(&vars, 0..n);
    let u = Alphabet::variables(&vars, n..n + m);
    let mut ev = PowerSumEvaluator::for_hook(&t, &u)?;
    ev.ensure(degree);
    // HS_lambda(T;U) vanishes off H(n,m)
    let shapes: Vec<Partition> = partitions_up_to(degree)
        .into_iter()
        .filter(|l| Hook::new(n, m).contains(l))
        .collect();
    let mults: Vec<i64> = shapes
        .par_iter()
        .map(|l| multiplicity(mode, l, hook, route, Truncation::default()))
        .collect::<Result<_>>()?;
    let mut out = MultiSeries::zero(n, m, degree);
    for (lambda, c) in shapes.iter().zip(mults) {
        if c == 0 {
            continue;
        }
        let hs = ev.schur(lambda).scale(&BigInt::from(c));
        out = out.add(&MultiSeries::from_poly(n, m, degree, &hs)?)?;
    }
    Ok(out)
}

/// One row of the Budzik check. Serializes as
/// `{"lambda":[..],"k":..,"l":..,"lhs":..,"rhs":..,"pass":..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudzikReport {
    pub lambda: Partition,
    pub k: usize,
    pub l: usize,
    /// Residue route.
    pub lhs: i64,
    /// Character route.
    pub rhs: i64,
    pub pass: bool,
    /// `m_lambda(k,l)` against the residue values summed down the diagonal.
    #[serde(skip)]
    pub eq_a: Option<DiagonalReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalReport {
    pub lambda: Partition,
    pub k: usize,
    pub l: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// `m_lambda(k,l) = sum_i m'_lambda(k-i, l-i)` with residue summands.
pub fn verify_diagonal_sum(lambda: &Partition, hook: Hook) -> Result<DiagonalReport> {
    let lhs = m_lambda(lambda, hook);
    let mut rhs = 0;
    for h in hook.diagonal() {
        rhs += m_prime_residue_with(lambda, h, Truncation::default())?;
    }
    Ok(DiagonalReport {
        lambda: lambda.clone(),
        k: hook.k,
        l: hook.l,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

pub fn verify_budzik(lambda: &Partition, hook: Hook) -> Result<BudzikReport> {
    verify_budzik_with(lambda, hook, Truncation::default())
}

pub fn verify_budzik_with(lambda: &Partition, hook: Hook, trunc: Truncation) -> Result<BudzikReport> {
    let lhs = m_prime_residue_with(lambda, hook, trunc)?;
    let rhs = m_prime_char(lambda, hook);
    let eq_a = verify_diagonal_sum(lambda, hook)?;
    Ok(BudzikReport {
        lambda: lambda.clone(),
        k: hook.k,
        l: hook.l,
        lhs,
        rhs,
        pass: lhs == rhs && eq_a.pass,
        eq_a: Some(eq_a),
    })
}

/// `m̄'` by residue against the character difference.
pub fn verify_bar(lambda: &Partition, hook: Hook, trunc: Truncation) -> Result<DiagonalReport> {
    let lhs = m_bar_prime_residue_with(lambda, hook, trunc)?;
    let rhs = m_bar_prime_char(lambda, hook);
    Ok(DiagonalReport {
        lambda: lambda.clone(),
        k: hook.k,
        l: hook.l,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub holds: bool,
    pub lhs: MultiSeries,
    pub rhs: MultiSeries,
    /// Smallest exponent vector (graded order) where the sides differ.
    pub first_mismatch: Option<Vec<u32>>,
}

fn compare(lhs: MultiSeries, rhs: MultiSeries) -> SeriesComparison {
    let mut keys: Vec<&Vec<u32>> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    keys.sort_by_key(|e| (e.iter().sum::<u32>(), (*e).clone()));
    let first_mismatch = keys
        .into_iter()
        .find(|e| lhs.coefficient(e) != rhs.coefficient(e))
        .cloned();
    SeriesComparison {
        holds: first_mismatch.is_none() && lhs.degree == rhs.degree,
        lhs,
        rhs,
        first_mismatch,
    }
}

/// The part of `P(k,l;n+1)` (or `P'`) linear in `t_{n+1}`, divided by
/// `t_{n+1}`, against `P̄(k,l;n)` (or `P̄'`) through degree `D-1`.
pub fn check_derivative_relation(hook: Hook, n: usize, degree: usize, primed: bool) -> Result<SeriesComparison> {
    let (full, bar) = if primed {
        (SeriesMode::Prime, SeriesMode::BarPrime)
    } else {
        (SeriesMode::Plain, SeriesMode::Bar)
    };
    let s = p_series(full, hook, n + 1, 0, degree)?;
    let lhs = s.linear_part(n);
    let rhs = p_series(bar, hook, n, 0, degree.saturating_sub(1))?;
    Ok(compare(lhs, rhs))
}

/// `P(k,l;n,m) = sum_i P'(k-i,l-i;n,m)` with residue-route primed series.
pub fn check_diagonal_series(hook: Hook, n: usize, m: usize, degree: usize) -> Result<SeriesComparison> {
    let lhs = p_series_with(SeriesMode::Plain, hook, n, m, degree, Route::Character)?;
    let mut rhs = MultiSeries::zero(n, m, degree);
    for h in hook.diagonal() {
        rhs = rhs.add(&p_series(SeriesMode::Prime, h, n, m, degree)?)?;
    }
    Ok(compare(lhs, rhs))
}

impl MultiplicityRecord {
    /// All four multiplicities of `lambda` for `hook`, primed ones by `route`.
    pub fn compute(lambda: &Partition, hook: Hook, route: Route) -> Result<Self> {
        let t = Truncation::default();
        Ok(MultiplicityRecord {
            lambda: lambda.clone(),
            k: hook.k,
            l: hook.l,
            m: Some(m_lambda(lambda, hook)),
            m_prime: Some(multiplicity(SeriesMode::Prime, lambda, hook, route, t)?),
            m_bar: Some(m_bar_lambda(lambda, hook)),
            m_bar_prime: Some(multiplicity(SeriesMode::BarPrime, lambda, hook, route, t)?),
            route,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{closed_form_series, ClosedForm};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn uni(s: &MultiSeries) -> Vec<i64> {
        s.to_univariate().unwrap().to_i64_vec().unwrap()
    }

    #[test]
    fn m_prime_char_examples() {
        assert_eq!(m_prime_char(&p("2"), Hook::new(1, 1)), 2);
        assert_eq!(m_prime_char(&Partition::empty(), Hook::new(1, 1)), 0);
        // one-row shapes with l = 0 count partitions of height <= k
        assert_eq!(m_prime_char(&p("4"), Hook::new(2, 0)), 3);
        assert_eq!(m_prime_char(&p("5"), Hook::new(3, 0)), 5);
    }

    #[test]
    fn series_examples() {
        let h = Hook::new(1, 1);
        assert_eq!(uni(&p_series(SeriesMode::Prime, h, 1, 0, 3).unwrap()), [0, 1, 2, 3]);
        assert_eq!(uni(&p_series(SeriesMode::Prime, h, 0, 1, 5).unwrap()), [0, 1, 0, 1, 0, 1]);
        assert_eq!(uni(&p_series(SeriesMode::Plain, h, 1, 0, 3).unwrap()), [1, 1, 2, 3]);
        assert_eq!(
            uni(&p_series_with(SeriesMode::Prime, h, 1, 0, 3, Route::Character).unwrap()),
            [0, 1, 2, 3]
        );
    }

    #[test]
    fn budzik_examples() {
        let h = Hook::new(1, 1);
        for (l, v) in [("2", 2), ("", 0), ("1,1", 0)] {
            let r = verify_budzik(&p(l), h).unwrap();
            assert_eq!((r.lhs, r.rhs, r.pass), (v, v, true));
        }
        let json = serde_json::to_string(&verify_budzik(&p("2"), h).unwrap()).unwrap();
        assert_eq!(json, r#"{"lambda":[2],"k":1,"l":1,"lhs":2,"rhs":2,"pass":true}"#);
    }

    #[test]
    fn derivative_examples() {
        assert!(check_derivative_relation(Hook::new(1, 1), 1, 4, true).unwrap().holds);
        assert!(check_derivative_relation(Hook::new(1, 1), 1, 4, false).unwrap().holds);
        assert!(check_derivative_relation(Hook::new(1, 0), 1, 4, false).unwrap().holds);
    }

    #[test]
    fn diagonal_series() {
        for h in [Hook::new(1, 1), Hook::new(2, 1)] {
            for n in 1..=2 {
                assert!(check_diagonal_series(h, n, 0, 4).unwrap().holds, "{h:?} n={n}");
            }
        }
        assert!(check_diagonal_series(Hook::new(1, 1), 1, 1, 3).unwrap().holds);
    }

    #[test]
    fn rationality_spot_check() {
        let h = Hook::new(2, 1);
        let s = p_series_with(SeriesMode::Prime, h, 1, 0, 8, Route::Character).unwrap();
        assert_eq!(s.to_univariate().unwrap(), closed_form_series(ClosedForm::TracesN1, h, 8).unwrap());
        let s = p_series_with(SeriesMode::Prime, h, 0, 1, 8, Route::Character).unwrap();
        assert_eq!(s.to_univariate().unwrap(), closed_form_series(ClosedForm::Supertraces01, h, 8).unwrap());
    }

    #[test]
    fn series_are_symmetric_and_nonnegative() {
        for mode in [SeriesMode::Plain, SeriesMode::Prime, SeriesMode::Bar, SeriesMode::BarPrime] {
            let s = p_series(mode, Hook::new(1, 1), 2, 1, 3).unwrap();
            assert!(s.is_separately_symmetric(), "{mode:?}");
            assert!(s.all_nonnegative(), "{mode:?}");
        }
    }

    #[test]
    fn record() {
        let r = MultiplicityRecord::compute(&p("1"), Hook::new(1, 1), Route::Residue).unwrap();
        assert_eq!((r.m, r.m_prime, r.m_bar, r.m_bar_prime), (Some(1), Some(1), Some(2), Some(2)));
    }

    #[test]
    fn display_and_linear_part() {
        let s = p_series(SeriesMode::Plain, Hook::new(1, 1), 2, 0, 2).unwrap();
        assert_eq!(s.to_string(), "1 + t1 + t2 + 2*t1^2 + 2*t1*t2 + 2*t2^2 + O(deg 3)");
        let lin = s.linear_part(1);
        assert_eq!(lin.to_string(), "1 + 2*t1 + O(deg 2)");
    }
}
