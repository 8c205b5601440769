//! Schur, skew Schur and hook Schur functions evaluated on finite alphabets
//! of signed Laurent monomials.
//!
//! The fast path goes through power sums: Newton's identities give the
//! complete and elementary symmetric functions, and a Jacobi–Trudi
//! determinant gives the (skew) Schur function. Hook Schur functions use the
//! super power sums `p_r(X) + (-1)^{r-1} p_r(Y)`, which is the same as
//! applying the involution `omega` to the `Y` half of `s_lambda(X ∪ Y)`.
//!
//! Three independent routes to `HS_lambda` are provided for cross-checking:
//! the defining sum over `mu ⊆ lambda`, the Józefiak–Pragacz symmetrization,
//! and, for typical shapes, the factorization over the `k x l` rectangle.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, VarTable};
use crate::partition::{typical_split, Hook, Partition};

/// A signed Laurent monomial `±x^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub negative: bool,
    pub exps: Exponent,
}

impl Letter {
    fn to_poly(&self, vars: &Arc<VarTable>) -> LaurentPoly {
        LaurentPoly::monomial(vars, self.exps.clone(), if self.negative { -1 } else { 1 })
    }
}

/// An ordered multiset of signed monomials over one variable table. Repeats
/// and the constant monomial are allowed.
#[derive(Clone, Debug)]
pub struct Alphabet {
    vars: Arc<VarTable>,
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(vars: &Arc<VarTable>, letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|l| l.exps.len() == vars.len()));
        Alphabet {
            vars: vars.clone(),
            letters,
        }
    }

    pub fn empty(vars: &Arc<VarTable>) -> Self {
        Self::new(vars, Vec::new())
    }

    /// The plain variables with the given indices, in order.
    pub fn variables(vars: &Arc<VarTable>, indices: impl IntoIterator<Item = usize>) -> Self {
        let letters = indices
            .into_iter()
            .map(|i| {
                let mut exps = vec![0; vars.len()];
                exps[i] = 1;
                Letter {
                    negative: false,
                    exps,
                }
            })
            .collect();
        Self::new(vars, letters)
    }

    /// Builds an alphabet from monomial polynomials, each of which must be
    /// a single term with coefficient `±1`.
    pub fn from_monomials(vars: &Arc<VarTable>, monos: &[LaurentPoly]) -> Result<Self> {
        let mut letters = Vec::with_capacity(monos.len());
        for m in monos {
            if m.vars() != vars {
                return Err(Error::VarTableMismatch);
            }
            let mut it = m.terms();
            match (it.next(), it.next()) {
                (Some((e, c)), None) if c.magnitude().is_one() => letters.push(Letter {
                    negative: c < &BigInt::zero(),
                    exps: e.clone(),
                }),
                _ => return Err(Error::NonMonomialImage(m.to_string())),
            }
        }
        Ok(Self::new(vars, letters))
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &Alphabet) -> Result<Alphabet> {
        if self.vars != other.vars {
            return Err(Error::VarTableMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(Alphabet::new(&self.vars, letters))
    }

    /// Every letter negated, so that `HS(X; -Y)` is expressible.
    pub fn negated(&self) -> Alphabet {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter {
                negative: !l.negative,
                exps: l.exps.clone(),
            })
            .collect();
        Alphabet::new(&self.vars, letters)
    }

    /// `sum_a a^r`.
    pub fn power_sum(&self, r: usize) -> LaurentPoly {
        LaurentPoly::from_terms(
            &self.vars,
            self.letters.iter().map(|l| {
                let e = l.exps.iter().map(|a| a * r as i32).collect();
                let c = if l.negative && r % 2 == 1 { -1 } else { 1 };
                (e, BigInt::from(c))
            }),
        )
    }

    /// `sum_a a`.
    pub fn sum(&self) -> LaurentPoly {
        self.power_sum(1)
    }

    pub fn letter_polys(&self) -> Vec<LaurentPoly> {
        self.letters.iter().map(|l| l.to_poly(&self.vars)).collect()
    }

    /// Indices of the variables when every letter is a distinct plain
    /// variable with coefficient one.
    fn plain_indices(&self) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.len());
        for l in &self.letters {
            if l.negative {
                return None;
            }
            let mut nz = l.exps.iter().enumerate().filter(|(_, &a)| a != 0);
            match (nz.next(), nz.next()) {
                (Some((i, 1)), None) if !out.contains(&i) => out.push(i),
                _ => return None,
            }
        }
        Some(out)
    }
}

/// Lazily extended complete (`h`) and elementary (`e`) symmetric functions
/// derived from a fixed sequence of power sums.
pub struct PowerSumEvaluator {
    vars: Arc<VarTable>,
    power_sums: Box<dyn Fn(usize) -> LaurentPoly + Send + Sync>,
    p: Vec<LaurentPoly>,
    h: Vec<LaurentPoly>,
    e: Vec<LaurentPoly>,
}

impl PowerSumEvaluator {
    pub fn new(
        vars: &Arc<VarTable>,
        power_sums: impl Fn(usize) -> LaurentPoly + Send + Sync + 'static,
    ) -> Self {
        let one = LaurentPoly::one(vars);
        PowerSumEvaluator {
            vars: vars.clone(),
            power_sums: Box::new(power_sums),
            p: vec![LaurentPoly::zero(vars)],
            h: vec![one.clone()],
            e: vec![one],
        }
    }

    /// Ordinary Schur functions of one alphabet.
    pub fn for_alphabet(a: &Alphabet) -> Self {
        let a = a.clone();
        Self::new(&a.vars.clone(), move |r| a.power_sum(r))
    }

    /// Hook Schur functions of the pair `(X; Y)`.
    pub fn for_hook(x: &Alphabet, y: &Alphabet) -> Result<Self> {
        if x.vars != y.vars {
            return Err(Error::VarTableMismatch);
        }
        let (x, y) = (x.clone(), y.clone());
        Ok(Self::new(&x.vars.clone(), move |r| {
            let py = y.power_sum(r);
            if r % 2 == 1 {
                &x.power_sum(r) + &py
            } else {
                &x.power_sum(r) - &py
            }
        }))
    }

    pub fn degree(&self) -> usize {
        self.h.len() - 1
    }

    /// Extends `p`, `h`, `e` through degree `n` by Newton's identities.
    pub fn ensure(&mut self, n: usize) {
        while self.h.len() <= n {
            let m = self.h.len();
            self.p.push((self.power_sums)(m));
            let mut h = LaurentPoly::zero(&self.vars);
            let mut e = LaurentPoly::zero(&self.vars);
            for r in 1..=m {
                h.add_assign_ref(&(&self.p[r] * &self.h[m - r]));
                let term = &self.p[r] * &self.e[m - r];
                if r % 2 == 1 {
                    e.add_assign_ref(&term);
                } else {
                    e.add_assign_ref(&-&term);
                }
            }
            let d = BigInt::from(m);
            self.h.push(h.div_exact_scalar(&d).expect("Newton identity division is exact"));
            self.e.push(e.div_exact_scalar(&d).expect("Newton identity division is exact"));
        }
    }

    pub fn h(&self, n: usize) -> &LaurentPoly {
        &self.h[n]
    }

    pub fn e(&self, n: usize) -> &LaurentPoly {
        &self.e[n]
    }

    /// `s_{lambda/mu}` by Jacobi–Trudi in `h` or its dual in `e`, whichever
    /// determinant is smaller. Entries reach index `lambda_1 + height - 1`, so
    /// this requires `ensure(|lambda|)` first.
    pub fn skew_schur(&self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
        if !lambda.contains(mu) {
            return Err(Error::NotContained {
                inner: mu.to_string(),
                outer: lambda.to_string(),
            });
        }
        let need = lambda.size();
        assert!(self.degree() >= need, "evaluator not extended to degree {need}");
        let (outer, inner, use_e) = if lambda.height() <= lambda.part(1) {
            (lambda.clone(), mu.clone(), false)
        } else {
            (lambda.conjugate(), mu.conjugate(), true)
        };
        let size = outer.height();
        let matrix: Vec<Vec<Option<&LaurentPoly>>> = (1..=size)
            .map(|i| {
                (1..=size)
                    .map(|j| {
                        let idx = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                        if idx < 0 {
                            None
                        } else if use_e {
                            Some(&self.e[idx as usize])
                        } else {
                            Some(&self.h[idx as usize])
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(determinant(&self.vars, &matrix))
    }

    pub fn schur(&self, lambda: &Partition) -> LaurentPoly {
        self.skew_schur(lambda, &Partition::empty())
            .expect("the empty partition is contained in every partition")
    }
}

/// Leibniz expansion organized as a dynamic program over the set of used
/// columns; zero entries are `None`.
fn determinant(vars: &Arc<VarTable>, matrix: &[Vec<Option<&LaurentPoly>>]) -> LaurentPoly {
    let n = matrix.len();
    let mut layer: HashMap<u32, LaurentPoly> = HashMap::new();
    layer.insert(0, LaurentPoly::one(vars));
    for row in matrix {
        let mut next: HashMap<u32, LaurentPoly> = HashMap::new();
        for (mask, acc) in &layer {
            for (c, entry) in row.iter().enumerate() {
                let Some(entry) = entry else { continue };
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (c + 1)).count_ones();
                let mut term = acc * *entry;
                if inversions % 2 == 1 {
                    term = -&term;
                }
                next.entry(mask | (1 << c))
                    .and_modify(|p| p.add_assign_ref(&term))
                    .or_insert(term);
            }
        }
        layer = next;
    }
    layer
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| LaurentPoly::zero(vars))
}

/// `s_lambda(A)`.
pub fn schur_eval(lambda: &Partition, a: &Alphabet) -> LaurentPoly {
    let mut ev = PowerSumEvaluator::for_alphabet(a);
    ev.ensure(lambda.size());
    ev.schur(lambda)
}

/// `s_{lambda/mu}(A)`; `mu` must be contained in `lambda`.
pub fn skew_schur_eval(lambda: &Partition, mu: &Partition, a: &Alphabet) -> Result<LaurentPoly> {
    let mut ev = PowerSumEvaluator::for_alphabet(a);
    ev.ensure(lambda.size());
    ev.skew_schur(lambda, mu)
}

/// `HS_lambda(X; Y)` through super power sums and Jacobi–Trudi.
pub fn hook_schur(lambda: &Partition, x: &Alphabet, y: &Alphabet) -> Result<LaurentPoly> {
    let mut ev = PowerSumEvaluator::for_hook(x, y)?;
    ev.ensure(lambda.size());
    Ok(ev.schur(lambda))
}

/// `HS_lambda(X; Y) = sum_{mu ⊆ lambda} s_mu(X) s_{(lambda/mu)'}(Y)`.
pub fn hook_schur_def(lambda: &Partition, x: &Alphabet, y: &Alphabet) -> Result<LaurentPoly> {
    if x.vars != y.vars {
        return Err(Error::VarTableMismatch);
    }
    let n = lambda.size();
    let mut ex = PowerSumEvaluator::for_alphabet(x);
    let mut ey = PowerSumEvaluator::for_alphabet(y);
    ex.ensure(n);
    ey.ensure(n);
    let conj = lambda.conjugate();
    let mut total = LaurentPoly::zero(&x.vars);
    for mu in sub_partitions(lambda) {
        let sx = ex.schur(&mu);
        if sx.is_zero() {
            continue;
        }
        let sy = ey.skew_schur(&conj, &mu.conjugate())?;
        total.add_assign_ref(&(&sx * &sy));
    }
    Ok(total)
}

/// Every partition whose diagram lies inside `lambda`.
pub fn sub_partitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, row: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lambda.height() {
            out.push(Partition::from_unsorted(prefix.clone()));
            return;
        }
        for v in (0..=cap.min(lambda.part(row))).rev() {
            prefix.push(v);
            rec(lambda, row + 1, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// `f_lambda = prod_{(i,j) ∈ lambda} (x_i + y_j)` with `x_i = 0` for `i > k`
/// and `y_j = 0` for `j > l`.
pub fn f_lambda(lambda: &Partition, hook: Hook, x: &Alphabet, y: &Alphabet) -> Result<LaurentPoly> {
    if x.vars != y.vars {
        return Err(Error::VarTableMismatch);
    }
    if x.len() != hook.k || y.len() != hook.l {
        return Err(Error::SizeMismatch(format!(
            "alphabets of sizes ({}, {}) for hook ({hook})",
            x.len(),
            y.len()
        )));
    }
    let xs = x.letter_polys();
    let ys = y.letter_polys();
    let zero = LaurentPoly::zero(&x.vars);
    let mut out = LaurentPoly::one(&x.vars);
    for (i, j) in lambda.boxes() {
        let xi = xs.get(i - 1).unwrap_or(&zero);
        let yj = ys.get(j - 1).unwrap_or(&zero);
        out = &out * &(xi + yj);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

fn permutation_sign(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 1
}

/// `prod_{i<j} (v_i - v_j)` over the listed variable indices.
fn vandermonde(vars: &Arc<VarTable>, idx: &[usize]) -> LaurentPoly {
    let mut out = LaurentPoly::one(vars);
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            out = &out * &(&LaurentPoly::var(vars, i) - &LaurentPoly::var(vars, j));
        }
    }
    out
}

/// `HS_lambda(X; Y)` by the Józefiak–Pragacz symmetrization of
/// `f_lambda / (prod_{i<j}(1 - x_j/x_i) prod_{i<j}(1 - y_j/y_i))` over
/// `S_k × S_l`. The sum is cleared to the Vandermonde denominators, summed
/// as an alternant, and divided exactly.
pub fn hook_schur_jp(lambda: &Partition, x: &Alphabet, y: &Alphabet) -> Result<LaurentPoly> {
    if x.vars != y.vars {
        return Err(Error::VarTableMismatch);
    }
    let xi = x.plain_indices().ok_or(Error::RepeatedVariable)?;
    let yi = y.plain_indices().ok_or(Error::RepeatedVariable)?;
    if xi.iter().any(|i| yi.contains(i)) {
        return Err(Error::RepeatedVariable);
    }
    let vars = x.vars.clone();
    let (k, l) = (xi.len(), yi.len());
    let f = f_lambda(lambda, Hook::new(k, l), x, y)?;

    // f * x^delta * y^delta with delta = (k-1, ..., 0)
    let mut shift = vec![0i32; vars.len()];
    for (a, &i) in xi.iter().enumerate() {
        shift[i] = (k - 1 - a) as i32;
    }
    for (b, &j) in yi.iter().enumerate() {
        shift[j] = (l - 1 - b) as i32;
    }
    let numerator = f.shift(&shift);

    let mut alternant = LaurentPoly::zero(&vars);
    for px in (0..k).permutations(k) {
        for py in (0..l).permutations(l) {
            let images: Vec<LaurentPoly> = (0..vars.len())
                .map(|v| {
                    let target = if let Some(a) = xi.iter().position(|&i| i == v) {
                        xi[px[a]]
                    } else if let Some(b) = yi.iter().position(|&j| j == v) {
                        yi[py[b]]
                    } else {
                        v
                    };
                    LaurentPoly::var(&vars, target)
                })
                .collect();
            let term = numerator.substitute(&images)?;
            if permutation_sign(&px) ^ permutation_sign(&py) {
                alternant.add_assign_ref(&-&term);
            } else {
                alternant.add_assign_ref(&term);
            }
        }
    }
    let denom = &vandermonde(&vars, &xi) * &vandermonde(&vars, &yi);
    alternant.div_exact(&denom)
}

/// `HS_lambda(X; Y) = prod_{i,j}(x_i + y_j) s_mu(X) s_nu(Y)` for typical
/// `lambda`, where `(mu, nu)` is the typical split.
pub fn hook_schur_factorized(
    lambda: &Partition,
    hook: Hook,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<LaurentPoly> {
    if x.vars != y.vars {
        return Err(Error::VarTableMismatch);
    }
    if x.len() != hook.k || y.len() != hook.l {
        return Err(Error::SizeMismatch(format!(
            "alphabets of sizes ({}, {}) for hook ({hook})",
            x.len(),
            y.len()
        )));
    }
    let (mu, nu) = typical_split(lambda, hook)?;
    let mut out = LaurentPoly::one(&x.vars);
    for xi in x.letter_polys() {
        for yj in y.letter_polys() {
            out = &out * &(&xi + &yj);
        }
    }
    Ok(&(&out * &schur_eval(&mu, x)) * &schur_eval(&nu, y))
}

/// `s_{lambda/mu}(A)` by direct enumeration of semistandard fillings: rows
/// weakly increasing, columns strictly increasing, entries indexing `A`.
pub fn skew_schur_by_tableaux(lambda: &Partition, mu: &Partition, a: &Alphabet) -> Result<LaurentPoly> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let cells: Vec<(usize, usize)> = lambda.boxes().filter(|&(i, j)| j > mu.part(i)).collect();
    let letters = a.letter_polys();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = LaurentPoly::zero(&a.vars);

    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        letters: &[LaurentPoly],
        grid: &mut HashMap<(usize, usize), usize>,
        weight: LaurentPoly,
        out: &mut LaurentPoly,
    ) {
        if pos == cells.len() {
            out.add_assign_ref(&weight);
            return;
        }
        let (i, j) = cells[pos];
        let lo_row = grid.get(&(i, j.wrapping_sub(1))).copied().unwrap_or(0);
        let lo_col = grid.get(&(i.wrapping_sub(1), j)).map_or(0, |v| v + 1);
        for v in lo_row.max(lo_col)..letters.len() {
            grid.insert((i, j), v);
            fill(pos + 1, cells, letters, grid, &weight * &letters[v], out);
        }
        grid.remove(&(i, j));
    }

    fill(0, &cells, &letters, &mut grid, LaurentPoly::one(&a.vars), &mut out);
    Ok(out)
}

pub fn schur_by_tableaux(lambda: &Partition, a: &Alphabet) -> LaurentPoly {
    skew_schur_by_tableaux(lambda, &Partition::empty(), a).expect("empty inner shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{classify_hook, partitions_up_to, HookClass};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Table `x1..xk, y1..yl` with the plain alphabets X and Y.
    fn setup(k: usize, l: usize) -> (Arc<VarTable>, Alphabet, Alphabet) {
        let names = VarTable::numbered("x", k).into_iter().chain(VarTable::numbered("y", l));
        let t = VarTable::new(names).unwrap();
        let x = Alphabet::variables(&t, 0..k);
        let y = Alphabet::variables(&t, k..k + l);
        (t, x, y)
    }

    fn v(t: &Arc<VarTable>, i: usize) -> LaurentPoly {
        LaurentPoly::var(t, i)
    }

    #[test]
    fn schur_examples() {
        let (t, a, _) = setup(2, 0);
        let (x1, x2) = (v(&t, 0), v(&t, 1));
        assert_eq!(schur_eval(&p("1"), &a), &x1 + &x2);
        assert!(schur_eval(&p("1,1,1"), &a).is_zero());
        let expected = &(&(&x1 * &x1) + &(&x1 * &x2)) + &(&x2 * &x2);
        assert_eq!(schur_eval(&p("2"), &a), expected);
        assert_eq!(schur_by_tableaux(&p("2"), &a), expected);
    }

    #[test]
    fn skew_schur_examples() {
        let (t, a, _) = setup(2, 0);
        let (x1, x2) = (v(&t, 0), v(&t, 1));
        let lam = p("2,1");
        assert_eq!(skew_schur_eval(&lam, &lam, &a).unwrap(), LaurentPoly::one(&t));
        let sum = &x1 + &x2;
        assert_eq!(skew_schur_eval(&lam, &p("1"), &a).unwrap(), &sum * &sum);
        let (t1, a1, _) = setup(1, 0);
        assert_eq!(skew_schur_eval(&lam, &p("2"), &a1).unwrap(), v(&t1, 0));
        assert!(matches!(
            skew_schur_eval(&p("2"), &p("1,1"), &a),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        let t = VarTable::new(["a", "b", "c"]).unwrap();
        let letters = vec![
            Letter { negative: false, exps: vec![1, 0, 0] },
            Letter { negative: true, exps: vec![0, 1, -1] },
            Letter { negative: false, exps: vec![0, 0, 0] },
        ];
        let a = Alphabet::new(&t, letters);
        for lambda in partitions_up_to(5) {
            for mu in sub_partitions(&lambda) {
                assert_eq!(
                    skew_schur_eval(&lambda, &mu, &a).unwrap(),
                    skew_schur_by_tableaux(&lambda, &mu, &a).unwrap(),
                    "{lambda}/{mu}"
                );
            }
        }
    }

    #[test]
    fn hook_schur_examples() {
        let (t, x, y) = setup(2, 1);
        let (x1, x2, y1) = (v(&t, 0), v(&t, 1), v(&t, 2));
        let expected = &(&(&x1 + &y1) * &(&x2 + &y1)) * &(&x1 + &x2);
        assert_eq!(hook_schur_def(&p("2,1"), &x, &y).unwrap(), expected);
        assert_eq!(hook_schur_jp(&p("2,1"), &x, &y).unwrap(), expected);
        assert_eq!(hook_schur(&p("2,1"), &x, &y).unwrap(), expected);
        assert_eq!(hook_schur_def(&p("1"), &x, &y).unwrap(), &(&x1 + &x2) + &y1);

        let (t, x, y) = setup(1, 1);
        let (x1, y1) = (v(&t, 0), v(&t, 1));
        let expected = &(&y1 * &y1) * &(&x1 + &y1);
        assert_eq!(hook_schur_def(&p("1,1,1"), &x, &y).unwrap(), expected);
        assert_eq!(hook_schur_jp(&p("1,1,1"), &x, &y).unwrap(), expected);
        assert_eq!(hook_schur_factorized(&p("1,1,1"), Hook::new(1, 1), &x, &y).unwrap(), expected);
    }

    #[test]
    fn f_lambda_examples() {
        let (t, x, y) = setup(2, 1);
        let (x1, x2, y1) = (v(&t, 0), v(&t, 1), v(&t, 2));
        let expected = &(&(&x1 + &y1) * &x1) * &(&x2 + &y1);
        assert_eq!(f_lambda(&p("2,1"), Hook::new(2, 1), &x, &y).unwrap(), expected);
        assert_eq!(f_lambda(&Partition::empty(), Hook::new(2, 1), &x, &y).unwrap(), LaurentPoly::one(&t));
        let (t, x, y) = setup(1, 1);
        assert_eq!(f_lambda(&p("1"), Hook::new(1, 1), &x, &y).unwrap(), &v(&t, 0) + &v(&t, 1));
        assert!(f_lambda(&p("1"), Hook::new(2, 1), &x, &y).is_err());
    }

    #[test]
    fn factorized_examples() {
        let (t, x, y) = setup(2, 1);
        let (x1, x2, y1) = (v(&t, 0), v(&t, 1), v(&t, 2));
        let expected = &(&(&(&x1 + &y1) * &(&x2 + &y1)) * &(&x1 * &x2)) * &(&x1 + &x2);
        assert_eq!(hook_schur_factorized(&p("3,2"), Hook::new(2, 1), &x, &y).unwrap(), expected);
        let rect = Partition::rectangle(2, 1);
        assert_eq!(
            hook_schur_factorized(&rect, Hook::new(2, 1), &x, &y).unwrap(),
            &(&x1 + &y1) * &(&x2 + &y1)
        );
        assert!(matches!(
            hook_schur_factorized(&p("1"), Hook::new(2, 1), &x, &y),
            Err(Error::NotTypical { .. })
        ));
    }

    #[test]
    fn jp_rejects_repeated_variables() {
        let (t, x, _) = setup(2, 0);
        assert!(matches!(hook_schur_jp(&p("1"), &x, &x), Err(Error::RepeatedVariable)));
        let doubled = Alphabet::variables(&t, [0, 0]);
        let empty = Alphabet::empty(&t);
        assert!(matches!(hook_schur_jp(&p("1"), &doubled, &empty), Err(Error::RepeatedVariable)));
    }

    #[test]
    fn jp_empty_partition_is_one() {
        let (t, x, y) = setup(2, 2);
        assert_eq!(hook_schur_jp(&Partition::empty(), &x, &y).unwrap(), LaurentPoly::one(&t));
    }

    #[test]
    fn super_schur_relation() {
        // HS(X; -Y) is the super Schur function: with X = Y it vanishes for nonempty shapes
        let t = VarTable::new(["a", "b"]).unwrap();
        let x = Alphabet::variables(&t, 0..2);
        for lambda in partitions_up_to(4).into_iter().skip(1) {
            assert!(hook_schur(&lambda, &x, &x.negated()).unwrap().is_zero());
        }
    }

    #[test]
    fn hook_schur_symmetric_in_each_alphabet() {
        let (t, _, _) = setup(2, 2);
        let x = Alphabet::variables(&t, [0, 1]);
        let y = Alphabet::variables(&t, [2, 3]);
        let xs = Alphabet::variables(&t, [1, 0]);
        let ys = Alphabet::variables(&t, [3, 2]);
        for lambda in partitions_up_to(4) {
            let base = hook_schur_def(&lambda, &x, &y).unwrap();
            let swap: Vec<_> = [1usize, 0, 3, 2].iter().map(|&i| v(&t, i)).collect();
            assert_eq!(base.substitute(&swap).unwrap(), base);
            assert_eq!(hook_schur_def(&lambda, &xs, &ys).unwrap(), base);
        }
    }

    #[test]
    fn fast_path_matches_definition() {
        for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 2), (2, 0)] {
            let (_, x, y) = setup(k, l);
            for lambda in partitions_up_to(5) {
                assert_eq!(
                    hook_schur(&lambda, &x, &y).unwrap(),
                    hook_schur_def(&lambda, &x, &y).unwrap(),
                    "{lambda} ({k},{l})"
                );
            }
        }
    }

    #[test]
    fn hook_theorem_small() {
        for k in 0..=2 {
            for l in 0..=2 {
                let (_, x, y) = setup(k, l);
                for lambda in partitions_up_to(6) {
                    let zero = hook_schur_def(&lambda, &x, &y).unwrap().is_zero();
                    let outside = classify_hook(&lambda, Hook::new(k, l)) == HookClass::Outside;
                    assert_eq!(zero, outside, "{lambda} ({k},{l})");
                }
            }
        }
    }
}
