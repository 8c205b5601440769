//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! runtime error, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charkron::{KroneckerCache, MultiplicityRecord, Route};
use crate::error::Error;
use crate::hookschur::{hook_schur, Alphabet};
use crate::partition::{classify_hook, partitions_up_to, Constraints, Hook, HookClass, Partition};
use crate::poincare::{
    check_derivative_relation, m_bar_prime_char, m_prime_char, p_series_with, verify_bar, verify_budzik, MultiSeries,
    SeriesMode,
};
use crate::qseries::{check_limit_identity, closed_form_series, gf_partitions, ClosedForm, LimitIdentity};
use crate::residue::{hook_vars, inner_product, Truncation};

pub const CACHE_ENV: &str = "SUPERSCHUR_CACHE";

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Hook Schur multiplicities and Poincaré series")]
pub struct RunConfig {
    /// Worker threads for per-partition fan-out (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Character/Kronecker cache file, loaded before and saved after the run.
    /// The SUPERSCHUR_CACHE environment variable takes precedence.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// m_lambda(k,l), or m̄_lambda(k,l) with --bar.
    Mlambda(MultArgs),
    /// m'_lambda(k,l), or m̄'_lambda(k,l) with --bar.
    Mprime(PrimeArgs),
    /// Truncated Poincaré series.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct MultArgs {
    /// Partition as comma-separated parts; "" or "∅" for the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Partition,
    /// Hook as "k,l".
    #[arg(long)]
    pub hook: Hook,
    #[arg(long)]
    pub bar: bool,
    #[arg(long, value_enum, default_value_t = ScalarFormat::Text)]
    pub format: ScalarFormat,
}

#[derive(Args, Debug)]
pub struct PrimeArgs {
    #[command(flatten)]
    pub base: MultArgs,
    #[arg(long, value_enum, default_value_t = RouteArg::Residue)]
    pub route: RouteArg,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long)]
    pub hook: Hook,
    /// Number of even variables t1..tn.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Number of odd variables u1..um.
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Truncation: keep total degree <= D.
    #[arg(long)]
    pub degree: usize,
    /// Route for primed multiplicities.
    #[arg(long, value_enum, default_value_t = RouteArg::Residue)]
    pub route: RouteArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest partition size (budzik, lemmas) or series degree (qidentities).
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Hooks as "k,l", separated by ';' or given repeatedly.
    #[arg(long, value_delimiter = ';', default_value = "1,1")]
    pub hooks: Vec<Hook>,
    /// Degree for the limit identities (qidentities only).
    #[arg(long, default_value_t = 20)]
    pub degree: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteArg {
    Residue,
    #[value(alias = "character")]
    Char,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Residue => Route::Residue,
            RouteArg::Char => Route::Character,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Plain,
    Prime,
    Bar,
    #[value(alias = "bar_prime")]
    Barprime,
}

impl From<ModeArg> for SeriesMode {
    fn from(m: ModeArg) -> SeriesMode {
        match m {
            ModeArg::Plain => SeriesMode::Plain,
            ModeArg::Prime => SeriesMode::Prime,
            ModeArg::Bar => SeriesMode::Bar,
            ModeArg::Barprime => SeriesMode::BarPrime,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Budzik,
    Lemmas,
    Qidentities,
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let cache = std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| config.cache.clone());
    if let Some(path) = &cache {
        if path.exists() {
            if let Err(e) = KroneckerCache::global().load(path) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        }
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(&config.command, &mut buffer));
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    if let Some(path) = &cache {
        if let Err(e) = KroneckerCache::global().save(path) {
            let _ = writeln!(err, "warning: could not write cache: {e}");
        }
    }
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch<W: Write>(command: &Command, out: &mut W) -> Outcome {
    match command {
        Command::Mlambda(a) => mlambda(a, out),
        Command::Mprime(a) => mprime(a, out),
        Command::Series(a) => series(a, out),
        Command::Verify(a) => verify(a, out),
    }
}

fn require_nondegenerate(hook: Hook) -> std::result::Result<(), Failure> {
    if hook.k + hook.l == 0 {
        return Err(Failure::Usage("hook must have k + l >= 1".into()));
    }
    Ok(())
}

fn print_scalar<W: Write>(out: &mut W, format: ScalarFormat, record: &MultiplicityRecord, value: i64) -> Outcome {
    match format {
        ScalarFormat::Text => writeln!(out, "{value}")?,
        ScalarFormat::Json => writeln!(out, "{}", serde_json::to_string(record).expect("plain data"))?,
    }
    Ok(true)
}

fn mlambda<W: Write>(a: &MultArgs, out: &mut W) -> Outcome {
    let cache = KroneckerCache::global();
    let mut record = MultiplicityRecord {
        lambda: a.lambda.clone(),
        k: a.hook.k,
        l: a.hook.l,
        m: None,
        m_prime: None,
        m_bar: None,
        m_bar_prime: None,
        route: Route::Character,
    };
    let value = if a.bar {
        let v = cache.m_bar_lambda(&a.lambda, a.hook);
        record.m_bar = Some(v);
        v
    } else {
        let v = cache.m_lambda(&a.lambda, a.hook);
        record.m = Some(v);
        v
    };
    print_scalar(out, a.format, &record, value)
}

fn mprime<W: Write>(a: &PrimeArgs, out: &mut W) -> Outcome {
    let b = &a.base;
    require_nondegenerate(b.hook)?;
    let route: Route = a.route.into();
    let mode = if b.bar { SeriesMode::BarPrime } else { SeriesMode::Prime };
    let value = match (mode, route) {
        (SeriesMode::Prime, Route::Character) => m_prime_char(&b.lambda, b.hook),
        (_, Route::Character) => m_bar_prime_char(&b.lambda, b.hook),
        _ => crate::poincare::multiplicity(mode, &b.lambda, b.hook, route, Truncation::default())?,
    };
    let record = MultiplicityRecord {
        lambda: b.lambda.clone(),
        k: b.hook.k,
        l: b.hook.l,
        m: None,
        m_prime: (!b.bar).then_some(value),
        m_bar: None,
        m_bar_prime: b.bar.then_some(value),
        route,
    };
    print_scalar(out, b.format, &record, value)
}

fn series<W: Write>(a: &SeriesArgs, out: &mut W) -> Outcome {
    if a.n + a.m == 0 {
        return Err(Failure::Usage("series needs n + m >= 1".into()));
    }
    let s = p_series_with(a.mode.into(), a.hook, a.n, a.m, a.degree, a.route.into())?;
    write_series(out, &s, a.format)?;
    Ok(true)
}

/// One variable: dense coefficient list for degrees `0..=D`. Several
/// variables: nonzero terms in graded order.
fn write_series<W: Write>(out: &mut W, s: &MultiSeries, format: Format) -> std::io::Result<()> {
    let uni = s.to_univariate();
    match format {
        Format::Text => writeln!(out, "{s}"),
        Format::Json => match uni {
            Some(u) => {
                let items: Vec<String> = u.coeffs().iter().map(|c| c.to_string()).collect();
                writeln!(out, "[{}]", items.join(","))
            }
            None => {
                let items: Vec<String> = s
                    .graded_terms()
                    .into_iter()
                    .map(|(e, c)| {
                        let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                        format!("{{\"exponents\":[{}],\"coeff\":{c}}}", exps.join(","))
                    })
                    .collect();
                writeln!(out, "[{}]", items.join(","))
            }
        },
        Format::Csv => {
            let mut header: Vec<&str> = s.vars().names().iter().map(String::as_str).collect();
            header.push("coeff");
            writeln!(out, "{}", header.join(","))?;
            match uni {
                Some(u) => {
                    for (i, c) in u.coeffs().iter().enumerate() {
                        writeln!(out, "{i},{c}")?;
                    }
                }
                None => {
                    for (e, c) in s.graded_terms() {
                        let row: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                        writeln!(out, "{},{c}", row.join(","))?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn verify<W: Write>(a: &VerifyArgs, out: &mut W) -> Outcome {
    for h in &a.hooks {
        require_nondegenerate(*h)?;
    }
    let (name, rows) = match a.suite {
        Suite::Budzik => ("budzik", budzik_rows(a.max_size.unwrap_or(4), &a.hooks)?),
        Suite::Lemmas => ("lemmas", lemma_rows(a.max_size.unwrap_or(3), &a.hooks)?),
        Suite::Qidentities => ("qidentities", q_rows(a.max_size.unwrap_or(10), a.degree, &a.hooks)?),
    };
    let passed = rows.iter().filter(|r| r["pass"] == json!(true)).count();
    let ok = passed == rows.len();
    let summary = json!({
        "suite": name,
        "cases": rows.len(),
        "passed": passed,
        "failed": rows.len() - passed,
        "pass": ok,
    });
    writeln!(out, "{summary}")?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(ok)
}

fn budzik_rows(max_size: usize, hooks: &[Hook]) -> std::result::Result<Vec<Value>, Failure> {
    let cases: Vec<(Hook, Partition)> = hooks
        .iter()
        .flat_map(|&h| partitions_up_to(max_size).into_iter().map(move |l| (h, l)))
        .collect();
    let reports = cases
        .par_iter()
        .map(|(h, l)| verify_budzik(l, *h))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(reports
        .iter()
        .map(|r| serde_json::to_value(r).expect("plain data"))
        .collect())
}

fn lemma_rows(max_size: usize, hooks: &[Hook]) -> std::result::Result<Vec<Value>, Failure> {
    let mut rows = Vec::new();
    let shapes = partitions_up_to(max_size);
    for &h in hooks {
        let vars = hook_vars(h);
        let x = Alphabet::variables(&vars, 0..h.k);
        let y = Alphabet::variables(&vars, h.k..h.k + h.l);
        let hs: Vec<_> = shapes
            .iter()
            .map(|l| hook_schur(l, &x, &y))
            .collect::<crate::Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..shapes.len())
            .flat_map(|i| (0..shapes.len()).map(move |j| (i, j)))
            .collect();
        let values = pairs
            .par_iter()
            .map(|&(i, j)| inner_product(&hs[i], &hs[j], h))
            .collect::<crate::Result<Vec<_>>>()?;
        for (&(i, j), v) in pairs.iter().zip(values) {
            let typical = classify_hook(&shapes[i], h) == HookClass::Typical;
            let expected = i64::from(i == j && typical);
            rows.push(json!({
                "check": "orthonormality",
                "mu": shapes[i], "nu": shapes[j], "k": h.k, "l": h.l,
                "value": v, "expected": expected, "pass": v == expected,
            }));
        }
        let bars = shapes
            .par_iter()
            .map(|l| verify_bar(l, h, Truncation::default()))
            .collect::<crate::Result<Vec<_>>>()?;
        for r in bars {
            rows.push(json!({
                "check": "bar_difference",
                "lambda": r.lambda, "k": r.k, "l": r.l, "lhs": r.lhs, "rhs": r.rhs, "pass": r.pass,
            }));
        }
        let degree = max_size.max(1);
        for (check, primed) in [("derivative_plain", false), ("derivative_prime", true)] {
            let r = check_derivative_relation(h, 1, degree, primed)?;
            rows.push(json!({
                "check": check, "k": h.k, "l": h.l, "n": 1, "degree": degree, "pass": r.holds,
            }));
        }
    }
    Ok(rows)
}

fn q_rows(max_size: usize, limit_degree: usize, hooks: &[Hook]) -> std::result::Result<Vec<Value>, Failure> {
    let mut rows = Vec::new();
    let mut limits = vec![("limit_self_conjugate", 0, LimitIdentity::SelfConjugateSum)];
    limits.extend((1..=3).map(|n| ("limit_shifted", n, LimitIdentity::ShiftedSum(n))));
    for (check, n, which) in limits {
        let r = check_limit_identity(which, limit_degree);
        rows.push(json!({
            "check": check, "n": n, "degree": limit_degree,
            "first_discrepancy": r.first_discrepancy, "pass": r.holds,
        }));
    }
    let d = max_size;
    for &h in hooks {
        let closed = closed_form_series(ClosedForm::TracesN1, h, d)?;
        let counted = gf_partitions("t", &Constraints { typical: Some(h), ..Default::default() }, d);
        let series = p_series_with(SeriesMode::Prime, h, 1, 0, d, Route::Character)?;
        let series = series.to_univariate().expect("one variable");
        rows.push(json!({
            "check": "traces_n1", "k": h.k, "l": h.l, "degree": d,
            "pass": closed == counted && series == closed,
        }));

        // P'(k,l;0,1) is symmetric in (k,l); the closed form is stated for k >= l
        let big = if h.k >= h.l { h } else { h.swapped() };
        let closed = closed_form_series(ClosedForm::Supertraces01, big, d)?;
        let sc = |hook: Hook| {
            gf_partitions("u", &Constraints { in_hook: Some(hook), self_conjugate: true, ..Default::default() }, d)
        };
        let counted = match h.shrink() {
            Some(small) => sc(h).sub(&sc(small)),
            None => sc(h),
        };
        let series = p_series_with(SeriesMode::Prime, h, 0, 1, d, Route::Character)?;
        let series = series.to_univariate().expect("one variable");
        rows.push(json!({
            "check": "supertraces_01", "k": h.k, "l": h.l, "degree": d,
            "pass": closed == counted && series == closed,
        }));
    }
    Ok(rows)
}
