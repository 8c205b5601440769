//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A polynomial is tied to a [`VarTable`]; exponent vectors are dense over
//! the table (tables here hold a dozen variables at most) and may be
//! negative. Zero coefficients are never stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    /// `prefix1, ..., prefix{count}`.
    pub fn numbered(prefix: &str, count: usize) -> Vec<String> {
        (1..=count).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<VarTable>,
    terms: HashMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: HashMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        let exps = vec![0; vars.len()];
        Self::monomial(vars, exps, c)
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, 1)
    }

    pub fn monomial(vars: &Arc<VarTable>, exps: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    /// The single variable with index `i`.
    pub fn var(vars: &Arc<VarTable>, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, exps, 1)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> HashMap<Exponent, BigInt> {
        self.terms
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponent, c: BigInt) {
        debug_assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.vars.len()])
    }

    fn check_table(&self, other: &LaurentPoly) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        assert!(same_table(&self.vars, &other.vars), "variable tables differ");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn multiply(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_table(other)?;
        let mut acc: HashMap<Exponent, BigInt> =
            HashMap::with_capacity(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Divides every coefficient by `d`, failing unless each division is exact.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Result<LaurentPoly> {
        let mut terms = HashMap::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("coefficient {c} by {d}")));
            }
            terms.insert(e.clone(), q);
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Replaces every variable by `x -> x^{-1}`.
    pub fn invert_variables(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|a| -a).collect(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&[i32]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    /// Applies a variable substitution. `images[i]` is the image of variable
    /// `i` and must be a single monomial with coefficient `1` or `-1`; all
    /// images share one target table, which may differ from the source table.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::SizeMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        let mut monos = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            if !same_table(&img.vars, &target) {
                return Err(Error::VarTableMismatch);
            }
            let mut it = img.terms.iter();
            match (it.next(), it.next()) {
                (Some((e, c)), None) if c.abs().is_one() => monos.push((e.clone(), c.is_negative())),
                _ => return Err(Error::NonMonomialImage(self.vars.name(i).to_string())),
            }
        }
        let mut out = LaurentPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut exps = vec![0i32; target.len()];
            let mut negative = false;
            for (a, (img, neg)) in e.iter().zip(&monos) {
                if *a == 0 {
                    continue;
                }
                for (slot, b) in exps.iter_mut().zip(img) {
                    *slot += a * b;
                }
                if *neg && a.rem_euclid(2) == 1 {
                    negative = !negative;
                }
            }
            out.add_term(exps, if negative { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// Smallest and largest exponent of variable `v` over all terms.
    pub fn degree_range(&self, v: usize) -> Result<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[v]);
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(lo, hi), a| (lo.min(a), hi.max(a))))
    }

    /// Total degree (sum of exponents) range over all terms.
    pub fn total_degree_range(&self) -> Result<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(lo, hi), a| (lo.min(a), hi.max(a))))
    }

    /// Exact division by `divisor`, by repeated cancellation of the
    /// lexicographically leading term. Fails when the quotient would leave the
    /// exponent box forced by the degree ranges, or a coefficient division is
    /// inexact.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_table(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let nvars = self.vars.len();
        let mut bounds = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let (plo, phi) = self.degree_range(v)?;
            let (dlo, dhi) = divisor.degree_range(v)?;
            bounds.push((plo - dlo, phi - dhi));
        }
        let (lead_e, lead_c) = divisor
            .terms
            .iter()
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero divisor");
        let mut rem: BTreeMap<Exponent, BigInt> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        let mut quotient = Self::zero(&self.vars);
        while let Some((e, c)) = rem.pop_last() {
            let qe: Exponent = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let (qc, r) = c.div_rem(&lead_c);
            let in_box = qe.iter().zip(&bounds).all(|(a, (lo, hi))| lo <= a && a <= hi);
            if !r.is_zero() || !in_box {
                return Err(Error::InexactDivision("polynomial does not divide".into()));
            }
            for (de, dc) in &divisor.terms {
                if *de == lead_e {
                    continue;
                }
                let ne: Exponent = qe.iter().zip(de).map(|(a, b)| a + b).collect();
                let entry = rem.entry(ne.clone()).or_insert_with(BigInt::zero);
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&ne);
                }
            }
            quotient.add_term(qe, qc);
        }
        Ok(quotient)
    }

    /// Terms in graded-lexicographic order: total degree descending, then
    /// exponent vectors lexicographically descending.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: i64 = a.0.iter().map(|&x| x as i64).sum();
            let db: i64 = b.0.iter().map(|&x| x as i64).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

/// Serialized as `coeff * x1^a1 * x2^a2 + ...` in graded-lex order; `0` for
/// the zero polynomial.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, " * {}", self.vars.name(i))?,
                    _ => write!(f, " * {}^{}", self.vars.name(i), a)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{self}]")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable tables differ")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.multiply(rhs).expect("variable tables differ")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
