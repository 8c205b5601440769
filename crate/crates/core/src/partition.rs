//! Integer partitions, the `k x l` hook, and the diagram decompositions used
//! by the factorization theorem and the self-conjugate counting argument.
//!
//! Parts beyond the length of a partition read as zero, so `lambda.part(i)`
//! is defined for every `i`. Rows are 1-based in [`Partition::part`] to match
//! the usual `lambda_1 >= lambda_2 >= ...` indexing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition, discarding zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` with 1-based `i`; zero outside `1..=height`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Young diagram containment, `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes `(row, col)` of the diagram, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Every partition whose diagram is this one plus a single box, ordered
    /// by the row that gains the box.
    pub fn add_box_successors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let above = if i == 0 { usize::MAX } else { self.parts[i - 1] };
            let current = self.parts.get(i).copied().unwrap_or(0);
            if current < above {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    pub fn classify_hook(&self, hook: Hook) -> HookClass {
        classify_hook(self, hook)
    }

    /// Multiplicities `a_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.part(1) + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }

    /// Text form used on the command line and in cache files: `3,2,1`, with
    /// the empty string for the empty partition.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part `{t}` in `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// The `k x l` hook: partitions with `lambda_{k+1} <= l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hook {
    pub k: usize,
    pub l: usize,
}

impl Hook {
    pub const fn new(k: usize, l: usize) -> Self {
        Hook { k, l }
    }

    /// The next smaller hook down the diagonal, `(k-1, l-1)`, when it exists.
    pub fn shrink(self) -> Option<Hook> {
        if self.k == 0 || self.l == 0 {
            None
        } else {
            Some(Hook::new(self.k - 1, self.l - 1))
        }
    }

    /// `(k, l), (k-1, l-1), ..., (k-m, l-m)` with `m = min(k, l)`.
    pub fn diagonal(self) -> impl Iterator<Item = Hook> {
        let m = self.k.min(self.l);
        (0..=m).map(move |i| Hook::new(self.k - i, self.l - i))
    }

    pub fn contains(self, lambda: &Partition) -> bool {
        lambda.part(self.k + 1) <= self.l
    }

    pub fn swapped(self) -> Hook {
        Hook::new(self.l, self.k)
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.k, self.l)
    }
}

impl FromStr for Hook {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let mut it = s.split(',').map(|t| t.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(k)), Some(Ok(l)), None) => Ok(Hook::new(k, l)),
            _ => Err(Error::Parse(format!("hook must be written `k,l`, got `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum HookClass {
    Outside,
    Atypical,
    Typical,
}

/// Outside when `lambda_{k+1} > l`; typical when inside and `lambda_k >= l`.
/// For `k = 0` the typicality condition is vacuous.
pub fn classify_hook(lambda: &Partition, hook: Hook) -> HookClass {
    if !hook.contains(lambda) {
        HookClass::Outside
    } else if lambda.part(hook.k) >= hook.l {
        HookClass::Typical
    } else {
        HookClass::Atypical
    }
}

/// Filters for [`enumerate`]. Unset fields impose nothing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub max_height: Option<usize>,
    pub in_hook: Option<Hook>,
    pub typical: Option<Hook>,
    pub self_conjugate: bool,
}

impl Constraints {
    pub fn accepts(&self, lambda: &Partition) -> bool {
        if let Some(h) = self.max_height {
            if lambda.height() > h {
                return false;
            }
        }
        if let Some(hook) = self.in_hook {
            if !hook.contains(lambda) {
                return false;
            }
        }
        if let Some(hook) = self.typical {
            if classify_hook(lambda, hook) != HookClass::Typical {
                return false;
            }
        }
        !self.self_conjugate || lambda.is_self_conjugate()
    }
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` satisfying every constraint, lexicographically descending.
pub fn enumerate(n: usize, constraints: &Constraints) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| constraints.accepts(p))
        .collect()
}

/// All partitions of size `0..=max_size`, by size then lexicographically
/// descending.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// Splits a typical partition into the arm `mu` to the right of the `k x l`
/// rectangle and the conjugated leg `nu` below it.
pub fn typical_split(lambda: &Partition, hook: Hook) -> Result<(Partition, Partition)> {
    if classify_hook(lambda, hook) != HookClass::Typical {
        return Err(Error::NotTypical {
            lambda: lambda.to_string(),
            k: hook.k,
            l: hook.l,
        });
    }
    let mu = Partition::from_unsorted((1..=hook.k).map(|i| lambda.part(i) - hook.l).collect());
    let conj = lambda.conjugate();
    let nu = Partition::from_unsorted((1..=hook.l).map(|j| conj.part(j) - hook.k).collect());
    Ok((mu, nu))
}

/// Splits `lambda` against the `k x k` square into `(lambda_0, mu, nu)`:
/// the intersection with the square, the part right of column `k` in rows
/// `1..=k`, and the conjugate of everything below row `k`.
pub fn square_split(lambda: &Partition, k: usize) -> (Partition, Partition, Partition) {
    let lambda0 = Partition::from_unsorted((1..=k).map(|i| lambda.part(i).min(k)).collect());
    let mu = Partition::from_unsorted((1..=k).map(|i| lambda.part(i).saturating_sub(k)).collect());
    let below = Partition::from_unsorted(lambda.parts().iter().skip(k).copied().collect());
    (lambda0, mu, below.conjugate())
}
