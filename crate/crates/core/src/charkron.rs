//! Symmetric group characters, Kronecker coefficients, and the hook
//! multiplicities built from them.
//!
//! Characters are evaluated by Murnaghan–Nakayama border-strip removal on
//! beta-sets, memoized on `(lambda, rho)`. The cache is shared behind
//! read-write locks: lookups run concurrently, insertions are atomic per key,
//! and two threads racing on the same key compute the same value.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Hook, Partition};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Size of the conjugacy class of cycle type `rho` in `S_n`:
/// `n! / prod_i (i^{a_i} a_i!)`.
pub fn class_size(rho: &Partition) -> BigInt {
    let z = rho
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &a)| {
            acc * BigInt::from(i).pow(a as u32) * factorial(a)
        });
    let (q, r) = factorial(rho.size()).div_rem(&z);
    assert!(r.is_zero(), "class size of {rho} is not integral");
    q
}

/// Character values of every irreducible of `S_n` on every class, rows and
/// columns indexed by `partitions_of(n)`.
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<BigInt>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index_of(lambda)]
    }

    pub fn n(&self) -> usize {
        self.partitions.first().map_or(0, Partition::size)
    }

    /// `(1/n!) sum_rho |C_rho| chi^a(rho) chi^b(rho) chi^c(rho)`.
    fn triple_product(&self, a: &[i64], b: &[i64], c: &[i64]) -> u64 {
        let mut acc = BigInt::zero();
        for (i, size) in self.class_sizes.iter().enumerate() {
            let prod = BigInt::from(a[i]) * b[i] * c[i];
            acc += size * prod;
        }
        let (q, r) = acc.div_rem(&factorial(self.n()));
        assert!(r.is_zero(), "Kronecker class sum not divisible by n!");
        q.to_u64().expect("Kronecker coefficient must be a nonnegative integer")
    }
}

#[derive(Default)]
pub struct KroneckerCache {
    chars: RwLock<HashMap<(Partition, Partition), i64>>,
    gammas: RwLock<HashMap<[Partition; 3], u64>>,
    tables: RwLock<HashMap<usize, Arc<CharacterTable>>>,
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.height();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect())
}

impl KroneckerCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static KroneckerCache {
        static CACHE: OnceLock<KroneckerCache> = OnceLock::new();
        CACHE.get_or_init(KroneckerCache::new)
    }

    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "chi^{lambda} evaluated at class {rho}"
            )));
        }
        Ok(self.character_unchecked(lambda, rho))
    }

    fn character_unchecked(&self, lambda: &Partition, rho: &Partition) -> i64 {
        if rho.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(&v) = self.chars.read().unwrap().get(&key) {
            return v;
        }
        let r = rho.parts()[0];
        let rest = Partition::from_unsorted(rho.parts()[1..].to_vec());
        let beta = beta_set(lambda);
        let mut value = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&c| target < c && c < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            let chi = self.character_unchecked(&from_beta_set(moved), &rest);
            if between % 2 == 0 {
                value += chi;
            } else {
                value -= chi;
            }
        }
        self.chars.write().unwrap().entry(key).or_insert(value);
        value
    }

    pub fn table(&self, n: usize) -> Arc<CharacterTable> {
        if let Some(t) = self.tables.read().unwrap().get(&n) {
            return t.clone();
        }
        let partitions = partitions_of(n);
        let class_sizes = partitions.iter().map(class_size).collect();
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|r| self.character_unchecked(l, r)).collect())
            .collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = Arc::new(CharacterTable {
            partitions,
            class_sizes,
            values,
            index,
        });
        self.tables
            .write()
            .unwrap()
            .entry(n)
            .or_insert(table)
            .clone()
    }

    /// `gamma^lambda_{mu,nu}`, the multiplicity of `chi^lambda` in
    /// `chi^mu ⊗ chi^nu`. Stored under the sorted triple, so every argument
    /// order hits the same entry.
    pub fn kronecker(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let n = lambda.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "Kronecker coefficient of {lambda}, {mu}, {nu}"
            )));
        }
        let mut key = [lambda.clone(), mu.clone(), nu.clone()];
        key.sort();
        if let Some(&g) = self.gammas.read().unwrap().get(&key) {
            return Ok(g);
        }
        let table = self.table(n);
        let g = table.triple_product(table.row(lambda), table.row(mu), table.row(nu));
        self.gammas.write().unwrap().entry(key).or_insert(g);
        Ok(g)
    }

    /// `m_lambda(k,l) = sum_{mu ⊢ n, mu ∈ H(k,l)} gamma^lambda_{mu,mu}`.
    pub fn m_lambda(&self, lambda: &Partition, hook: Hook) -> i64 {
        let n = lambda.size();
        if n == 0 {
            return 1;
        }
        let table = self.table(n);
        table
            .partitions
            .iter()
            .filter(|mu| hook.contains(mu))
            .map(|mu| self.kronecker(lambda, mu, mu).expect("sizes agree") as i64)
            .sum()
    }

    /// Multiplicity of `chi^lambda` in the restriction to `S_n` of
    /// `sum_{mu ∈ H(k,l)} chi^mu ⊗ chi^mu` over `S_{n+1}`, by the branching rule.
    pub fn m_bar_lambda(&self, lambda: &Partition, hook: Hook) -> i64 {
        lambda
            .add_box_successors()
            .iter()
            .map(|up| self.m_lambda(up, hook))
            .sum()
    }

    /// Writes every cached character value and Kronecker coefficient as
    /// tab-separated `kind key value` lines, sorted for stable diffs.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut lines = Vec::new();
        for ((l, r), v) in self.chars.read().unwrap().iter() {
            lines.push(format!("chi\t{};{}\t{v}", l.to_text(), r.to_text()));
        }
        for ([a, b, c], v) in self.gammas.read().unwrap().iter() {
            lines.push(format!(
                "gamma\t{};{};{}\t{v}",
                a.to_text(),
                b.to_text(),
                c.to_text()
            ));
        }
        lines.sort();
        let mut f = fs::File::create(path)?;
        for line in lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }

    /// Merges entries from a file written by [`KroneckerCache::save`].
    pub fn load(&self, path: &Path) -> Result<usize> {
        let f = fs::File::open(path)?;
        let mut count = 0;
        for (lineno, line) in BufReader::new(f).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("{}:{}: malformed cache line", path.display(), lineno + 1));
            let mut fields = line.split('\t');
            let (kind, key, value) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => return Err(bad()),
            };
            let parts = key
                .split(';')
                .map(|s| s.parse::<Partition>())
                .collect::<Result<Vec<_>>>()?;
            match (kind, parts.as_slice()) {
                ("chi", [l, r]) => {
                    let v: i64 = value.parse().map_err(|_| bad())?;
                    self.chars.write().unwrap().insert((l.clone(), r.clone()), v);
                }
                ("gamma", [a, b, c]) => {
                    let v: u64 = value.parse().map_err(|_| bad())?;
                    let mut key = [a.clone(), b.clone(), c.clone()];
                    key.sort();
                    self.gammas.write().unwrap().insert(key, v);
                }
                _ => return Err(bad()),
            }
            count += 1;
        }
        Ok(count)
    }
}

pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    KroneckerCache::global().character(lambda, rho)
}

pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    KroneckerCache::global().kronecker(lambda, mu, nu)
}

pub fn m_lambda(lambda: &Partition, hook: Hook) -> i64 {
    KroneckerCache::global().m_lambda(lambda, hook)
}

pub fn m_bar_lambda(lambda: &Partition, hook: Hook) -> i64 {
    KroneckerCache::global().m_bar_lambda(lambda, hook)
}

/// How a primed multiplicity was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Differences of character-theoretic multiplicities down the hook diagonal.
    Character,
    /// Constant-term extraction against the superalgebra kernel.
    Residue,
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "char" | "character" => Ok(Route::Character),
            "residue" => Ok(Route::Residue),
            _ => Err(Error::Parse(format!("unknown route `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRecord {
    pub lambda: Partition,
    pub k: usize,
    pub l: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_prime: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_bar: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_bar_prime: Option<i64>,
    pub route: Route,
}
