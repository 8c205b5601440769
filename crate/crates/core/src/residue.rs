//! Contour integrals over `|x_i| = 1 + eps > |y_j| = 1` as exact
//! constant-term extraction.
//!
//! The kernel is
//!
//! ```text
//!         prod_{i != j} (1 - x_i/x_j) prod_{i != j} (1 - y_i/y_j)
//! Delta = -------------------------------------------------------
//!           prod_{i,j} (1 + x_i/y_j)(1 + y_j/x_i)
//! ```
//!
//! With `|y_j/x_i| < 1` each denominator pair expands as
//! `(y_j/x_i) sum_{m>=0} (m+1)(-y_j/x_i)^m`. The series factors are absorbed
//! one at a time, grouped by `x_i`. A factor only lowers the exponent of
//! `x_i` and raises that of `y_j`, so for a term whose `x_i`-exponent is `a`
//! the series can stop at `m = a`: every further term has negative
//! `x_i`-exponent and never reaches the constant term. Once every factor
//! touching `x_i` is absorbed, terms with nonzero `x_i`-exponent are dropped.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::charkron::factorial;
use crate::error::{Error, Result};
use crate::hookschur::{Alphabet, Letter, PowerSumEvaluator};
use crate::laurent::{Exponent, LaurentPoly, VarTable};
use crate::partition::{Hook, Partition};

/// Variable table `x1..xk, y1..yl` used by every kernel computation.
pub fn hook_vars(hook: Hook) -> Arc<VarTable> {
    let names = VarTable::numbered("x", hook.k)
        .into_iter()
        .chain(VarTable::numbered("y", hook.l));
    VarTable::new(names).expect("generated names are distinct")
}

fn ratio_letter(len: usize, up: usize, down: usize) -> Letter {
    let mut exps = vec![0; len];
    exps[up] += 1;
    exps[down] -= 1;
    Letter {
        negative: false,
        exps,
    }
}

/// `X X^{-1} ∪ Y Y^{-1}`: all `k^2 + l^2` ratios `x_i/x_j` and `y_i/y_j`,
/// including the `k + l` diagonal copies of `1`.
pub fn z0(hook: Hook, vars: &Arc<VarTable>) -> Alphabet {
    let (k, l) = (hook.k, hook.l);
    let n = vars.len();
    let mut letters = Vec::with_capacity(k * k + l * l);
    for i in 0..k {
        for j in 0..k {
            letters.push(ratio_letter(n, i, j));
        }
    }
    for i in 0..l {
        for j in 0..l {
            letters.push(ratio_letter(n, k + i, k + j));
        }
    }
    Alphabet::new(vars, letters)
}

/// `X Y^{-1} ∪ X^{-1} Y`: the `2kl` mixed ratios.
pub fn z1(hook: Hook, vars: &Arc<VarTable>) -> Alphabet {
    let (k, l) = (hook.k, hook.l);
    let n = vars.len();
    let mut letters = Vec::with_capacity(2 * k * l);
    for i in 0..k {
        for j in 0..l {
            letters.push(ratio_letter(n, i, k + j));
        }
    }
    for i in 0..k {
        for j in 0..l {
            letters.push(ratio_letter(n, k + j, i));
        }
    }
    Alphabet::new(vars, letters)
}

/// How far the series factors are expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Extra terms kept beyond the per-term bound on each series factor.
    pub slack: u32,
    /// Drop terms as soon as they can no longer reach the constant term
    /// (negative `x_i`-exponent or positive `y_j`-exponent). When off, terms
    /// are only dropped once their `x_i` group is finished.
    pub eager_prune: bool,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation {
            slack: 0,
            eager_prune: true,
        }
    }
}

impl Truncation {
    /// Every bound raised by one, with pruning deferred as late as possible.
    pub fn relaxed() -> Self {
        Truncation {
            slack: 1,
            eager_prune: false,
        }
    }
}

/// The kernel `Delta` split into a Laurent polynomial part and the list of
/// series factors `(i, j)`, each standing for `sum_m (m+1)(-y_j/x_i)^m`.
#[derive(Clone, Debug)]
pub struct DeltaKernel {
    hook: Hook,
    vars: Arc<VarTable>,
    finite_part: LaurentPoly,
    series_factors: Vec<(usize, usize)>,
}

impl DeltaKernel {
    pub fn new(hook: Hook) -> Self {
        let vars = hook_vars(hook);
        let (k, l) = (hook.k, hook.l);
        let one = LaurentPoly::one(&vars);
        let mut numerator = one.clone();
        for (offset, count) in [(0, k), (k, l)] {
            for i in 0..count {
                for j in 0..count {
                    if i != j {
                        let mut e = vec![0; vars.len()];
                        e[offset + i] = 1;
                        e[offset + j] = -1;
                        numerator = &numerator * &(&one - &LaurentPoly::monomial(&vars, e, 1));
                    }
                }
            }
        }
        // prod_{i,j} y_j/x_i = prod_i x_i^{-l} prod_j y_j^{k}
        let mut prefactor = vec![0; vars.len()];
        for slot in prefactor.iter_mut().take(k) {
            *slot = -(l as i32);
        }
        for slot in prefactor.iter_mut().skip(k) {
            *slot = k as i32;
        }
        let finite_part = numerator.shift(&prefactor);
        let series_factors = (0..k).flat_map(|i| (0..l).map(move |j| (i, j))).collect();
        DeltaKernel {
            hook,
            vars,
            finite_part,
            series_factors,
        }
    }

    pub fn hook(&self) -> Hook {
        self.hook
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn finite_part(&self) -> &LaurentPoly {
        &self.finite_part
    }

    pub fn series_factors(&self) -> &[(usize, usize)] {
        &self.series_factors
    }

    /// `x_i`-exponent slot and `y_j`-exponent slot of a series factor.
    fn slots(&self, (i, j): (usize, usize)) -> (usize, usize) {
        (i, self.hook.k + j)
    }

    /// Constant term of `integrand * Delta`, unnormalized.
    pub fn constant_term(&self, integrand: &LaurentPoly, trunc: Truncation) -> Result<BigInt> {
        if integrand.vars() != &self.vars {
            return Err(Error::VarTableMismatch);
        }
        let (k, l) = (self.hook.k, self.hook.l);
        let start = integrand * &self.finite_part;
        let mut acc: HashMap<Exponent, BigInt> = start.into_terms();
        for i in 0..k {
            for j in 0..l {
                let (xs, ys) = self.slots((i, j));
                acc = absorb(acc, xs, ys, trunc);
            }
            acc.retain(|e, _| e[i] == 0);
        }
        let zero = vec![0; self.vars.len()];
        Ok(acc.remove(&zero).unwrap_or_else(BigInt::zero))
    }

    /// Constant term divided by `k! l!`, which must be exact.
    pub fn normalized_constant_term(&self, integrand: &LaurentPoly, trunc: Truncation) -> Result<BigInt> {
        let ct = self.constant_term(integrand, trunc)?;
        let d = factorial(self.hook.k) * factorial(self.hook.l);
        let (q, r) = ct.div_rem(&d);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "constant term {ct} by {}!{}!",
                self.hook.k, self.hook.l
            )));
        }
        Ok(q)
    }

    /// The series factor `sum_{m=0}^{order} (m+1)(-y_j/x_i)^m` as a
    /// polynomial, for reconstruction checks.
    pub fn truncated_series_factor(&self, factor: (usize, usize), order: u32) -> LaurentPoly {
        let (xs, ys) = self.slots(factor);
        LaurentPoly::from_terms(
            &self.vars,
            (0..=order).map(|m| {
                let mut e = vec![0; self.vars.len()];
                e[xs] = -(m as i32);
                e[ys] = m as i32;
                let c = BigInt::from(m + 1);
                (e, if m % 2 == 1 { -c } else { c })
            }),
        )
    }
}

/// Multiplies every term by the series factor for `(x slot, y slot)`,
/// keeping only the powers that can still reach the constant term.
fn absorb(
    acc: HashMap<Exponent, BigInt>,
    xs: usize,
    ys: usize,
    trunc: Truncation,
) -> HashMap<Exponent, BigInt> {
    let mut out: HashMap<Exponent, BigInt> = HashMap::with_capacity(acc.len() * 2);
    for (e, c) in acc {
        let a = e[xs];
        let b = e[ys];
        if trunc.eager_prune && (a < 0 || b > 0) {
            continue;
        }
        let mut bound = a.max(0) as i64 + trunc.slack as i64;
        if trunc.eager_prune {
            bound = bound.min(-(b as i64));
        }
        for m in 0..=bound {
            let mut ne = e.clone();
            ne[xs] -= m as i32;
            ne[ys] += m as i32;
            let mut coeff = &c * BigInt::from(m + 1);
            if m % 2 == 1 {
                coeff = -coeff;
            }
            let slot = out.entry(ne).or_insert_with(BigInt::zero);
            *slot += coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `<f, g> = (k! l!)^{-1} CT[ f(X;Y) g(X^{-1};Y^{-1}) Delta ]`.
/// Both arguments must live over [`hook_vars`] for the hook.
pub fn inner_product(f: &LaurentPoly, g: &LaurentPoly, hook: Hook) -> Result<i64> {
    inner_product_with(f, g, hook, Truncation::default())
}

pub fn inner_product_with(f: &LaurentPoly, g: &LaurentPoly, hook: Hook, trunc: Truncation) -> Result<i64> {
    let kernel = ResidueEngine::for_hook(hook);
    let kernel = kernel.kernel();
    if f.vars() != kernel.vars() || g.vars() != kernel.vars() {
        return Err(Error::VarTableMismatch);
    }
    let integrand = f * &g.invert_variables();
    to_i64(kernel.normalized_constant_term(&integrand, trunc)?)
}

fn to_i64(v: BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Overflow(v.to_string()))
}

/// Per-hook state for residue multiplicities: the kernel, the alphabets
/// `Z_0`, `Z_1`, and the hook Schur evaluator on `(Z_0; Z_1)`, extended on
/// demand and shared between threads.
pub struct ResidueEngine {
    kernel: DeltaKernel,
    z_sum: LaurentPoly,
    evaluator: RwLock<PowerSumEvaluator>,
}

impl ResidueEngine {
    pub fn new(hook: Hook) -> Self {
        let kernel = DeltaKernel::new(hook);
        let vars = kernel.vars().clone();
        let (a, b) = (z0(hook, &vars), z1(hook, &vars));
        let z_sum = &a.sum() + &b.sum();
        let evaluator = PowerSumEvaluator::for_hook(&a, &b).expect("shared table");
        ResidueEngine {
            kernel,
            z_sum,
            evaluator: RwLock::new(evaluator),
        }
    }

    /// Shared engine for `hook`, created on first use.
    pub fn for_hook(hook: Hook) -> Arc<ResidueEngine> {
        static ENGINES: OnceLock<Mutex<HashMap<Hook, Arc<ResidueEngine>>>> = OnceLock::new();
        let map = ENGINES.get_or_init(|| Mutex::new(HashMap::new()));
        map.lock()
            .unwrap()
            .entry(hook)
            .or_insert_with(|| Arc::new(ResidueEngine::new(hook)))
            .clone()
    }

    pub fn kernel(&self) -> &DeltaKernel {
        &self.kernel
    }

    /// `HS_lambda(Z_0; Z_1)`.
    pub fn hook_schur_z(&self, lambda: &Partition) -> LaurentPoly {
        let n = lambda.size();
        {
            let ev = self.evaluator.read().unwrap();
            if ev.degree() >= n {
                return ev.schur(lambda);
            }
        }
        let mut ev = self.evaluator.write().unwrap();
        ev.ensure(n);
        ev.schur(lambda)
    }

    /// `m'_lambda = <HS_lambda(Z_0; Z_1), 1>`.
    pub fn m_prime(&self, lambda: &Partition, trunc: Truncation) -> Result<i64> {
        let hs = self.hook_schur_z(lambda);
        if hs.is_zero() {
            return Ok(0);
        }
        to_i64(self.kernel.normalized_constant_term(&hs, trunc)?)
    }

    /// `m̄'_lambda = <HS_lambda(Z_0; Z_1) sum_{z ∈ Z} z, 1>`.
    pub fn m_bar_prime(&self, lambda: &Partition, trunc: Truncation) -> Result<i64> {
        let hs = self.hook_schur_z(lambda);
        if hs.is_zero() {
            return Ok(0);
        }
        let integrand = &hs * &self.z_sum;
        to_i64(self.kernel.normalized_constant_term(&integrand, trunc)?)
    }
}

/// `m'_lambda(k, l)` by constant-term extraction. The degenerate hook `(0,0)`
/// is accepted and gives `[lambda = ∅]`.
pub fn m_prime_residue(lambda: &Partition, hook: Hook) -> Result<i64> {
    ResidueEngine::for_hook(hook).m_prime(lambda, Truncation::default())
}

pub fn m_prime_residue_with(lambda: &Partition, hook: Hook, trunc: Truncation) -> Result<i64> {
    ResidueEngine::for_hook(hook).m_prime(lambda, trunc)
}

/// `m̄'_lambda(k, l)` by constant-term extraction.
pub fn m_bar_prime_residue(lambda: &Partition, hook: Hook) -> Result<i64> {
    ResidueEngine::for_hook(hook).m_bar_prime(lambda, Truncation::default())
}

pub fn m_bar_prime_residue_with(lambda: &Partition, hook: Hook, trunc: Truncation) -> Result<i64> {
    ResidueEngine::for_hook(hook).m_bar_prime(lambda, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookschur::hook_schur;
    use crate::partition::{classify_hook, partitions_up_to, HookClass};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hs(lambda: &Partition, hook: Hook) -> LaurentPoly {
        let vars = hook_vars(hook);
        let x = Alphabet::variables(&vars, 0..hook.k);
        let y = Alphabet::variables(&vars, hook.k..hook.k + hook.l);
        hook_schur(lambda, &x, &y).unwrap()
    }

    #[test]
    fn alphabet_sizes() {
        for (k, l) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let h = Hook::new(k, l);
            let vars = hook_vars(h);
            assert_eq!(z0(h, &vars).len(), k * k + l * l);
            assert_eq!(z1(h, &vars).len(), 2 * k * l);
            let ones = z0(h, &vars).letters().iter().filter(|t| t.exps.iter().all(|&a| a == 0)).count();
            assert_eq!(ones, k + l);
        }
    }

    #[test]
    fn inner_product_examples() {
        let h = Hook::new(1, 1);
        let one = LaurentPoly::one(&hook_vars(h));
        assert_eq!(inner_product(&hs(&p("1"), h), &hs(&p("1"), h), h).unwrap(), 1);
        assert_eq!(inner_product(&hs(&p("1"), h), &hs(&p("2"), h), h).unwrap(), 0);
        assert_eq!(inner_product(&one, &one, h).unwrap(), 0);
        let other = LaurentPoly::one(&VarTable::new(["a"]).unwrap());
        assert!(matches!(inner_product(&other, &one, h), Err(Error::VarTableMismatch)));
    }

    #[test]
    fn m_prime_examples() {
        let h = Hook::new(1, 1);
        assert_eq!(m_prime_residue(&p("1"), h).unwrap(), 1);
        assert_eq!(m_prime_residue(&p("2"), h).unwrap(), 2);
        assert_eq!(m_prime_residue(&p("1,1"), h).unwrap(), 0);
        assert_eq!(m_prime_residue(&Partition::empty(), h).unwrap(), 0);
        assert_eq!(m_prime_residue(&Partition::empty(), Hook::new(0, 0)).unwrap(), 1);
        assert_eq!(m_prime_residue(&p("1"), Hook::new(0, 0)).unwrap(), 0);
    }

    #[test]
    fn m_bar_prime_examples() {
        assert_eq!(m_bar_prime_residue(&Partition::empty(), Hook::new(1, 1)).unwrap(), 1);
        assert_eq!(m_bar_prime_residue(&p("1"), Hook::new(1, 1)).unwrap(), 2);
        assert_eq!(m_bar_prime_residue(&p("1"), Hook::new(1, 0)).unwrap(), 1);
    }

    #[test]
    fn series_factor_inverts_squared_binomial() {
        // (1 + w)^2 * sum_{m<=M} (m+1)(-w)^m = 1 + O(w^{M+1}), w = y/x
        let kernel = DeltaKernel::new(Hook::new(1, 1));
        let vars = kernel.vars().clone();
        let w = LaurentPoly::monomial(&vars, vec![-1, 1], 1);
        let one = LaurentPoly::one(&vars);
        let sq = &(&one + &w) * &(&one + &w);
        for order in 0..8 {
            let prod = &sq * &kernel.truncated_series_factor((0, 0), order);
            for (e, c) in prod.terms() {
                let m = e[1];
                if m == 0 {
                    assert_eq!(*c, BigInt::from(1));
                } else {
                    assert!(m > order as i32, "stray term of degree {m}");
                }
            }
        }
    }

    #[test]
    fn kernel_reconstructs_numerator() {
        // finite_part * prod series * prod (1 + x_i/y_j)(1 + y_j/x_i) agrees with
        // the numerator in every term of total w-degree <= order
        let h = Hook::new(2, 1);
        let kernel = DeltaKernel::new(h);
        let vars = kernel.vars().clone();
        let one = LaurentPoly::one(&vars);
        let order = 6;
        let mut product = kernel.finite_part().clone();
        for &(i, j) in kernel.series_factors() {
            product = &product * &kernel.truncated_series_factor((i, j), order);
            let mut up = vec![0; vars.len()];
            up[i] = 1;
            up[h.k + j] = -1;
            let a = LaurentPoly::monomial(&vars, up.clone(), 1);
            let b = LaurentPoly::monomial(&vars, up.iter().map(|v| -v).collect(), 1);
            product = &(&product * &(&one + &a)) * &(&one + &b);
        }
        let mut numerator = one.clone();
        for (i, j) in [(0usize, 1usize), (1, 0)] {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            e[j] = -1;
            numerator = &numerator * &(&one - &LaurentPoly::monomial(&vars, e, 1));
        }
        // y-degree measures how far into the series a term reaches
        let mut low = product.clone();
        low.retain(|e| e[2] < order as i32);
        let mut expected = numerator.clone();
        expected.retain(|e| e[2] < order as i32);
        assert_eq!(low, expected);
    }

    #[test]
    fn orthonormality_small() {
        for h in [Hook::new(1, 1), Hook::new(2, 1)] {
            let shapes = partitions_up_to(3);
            for mu in &shapes {
                for nu in &shapes {
                    let got = inner_product(&hs(mu, h), &hs(nu, h), h).unwrap();
                    let typical = classify_hook(mu, h) == HookClass::Typical;
                    assert_eq!(got, i64::from(mu == nu && typical), "{mu} {nu} {h:?}");
                }
            }
        }
    }

    #[test]
    fn truncation_is_stable() {
        for h in [Hook::new(1, 1), Hook::new(2, 1)] {
            for lambda in partitions_up_to(4) {
                assert_eq!(
                    m_prime_residue(&lambda, h).unwrap(),
                    m_prime_residue_with(&lambda, h, Truncation::relaxed()).unwrap()
                );
                assert_eq!(
                    m_bar_prime_residue(&lambda, h).unwrap(),
                    m_bar_prime_residue_with(&lambda, h, Truncation::relaxed()).unwrap()
                );
            }
        }
    }

    #[test]
    fn budzik_small() {
        use crate::charkron::m_lambda;
        for h in [Hook::new(1, 1), Hook::new(2, 1), Hook::new(1, 2)] {
            for lambda in partitions_up_to(4) {
                let lower = h.shrink().map_or(0, |s| m_lambda(&lambda, s));
                assert_eq!(
                    m_prime_residue(&lambda, h).unwrap(),
                    m_lambda(&lambda, h) - lower,
                    "{lambda} {h:?}"
                );
            }
        }
    }
}
