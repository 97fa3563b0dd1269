//! Command-line front end for `menon-core`.
//!
//! [`run`] executes a parsed [`Cli`] and returns a [`Report`] holding the
//! human-readable text, the structured [`RunRecord`] and the exit code, so the
//! binary stays a thin shell and tests can drive commands in-process.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use menon_core::congruence::{IntPoly, PolySystem};
use menon_core::groups::{
    cyclic_count_burnside, cyclic_count_enumerate, cyclic_count_formula, DirectProductSpec,
};
use menon_core::menon::{
    named_identity, sum_r_direct, sum_r_formula, sum_s_direct, sum_s_formula, IdentityArgs,
    MenonInstance,
};
use menon_core::multifunc::FuncSpec;
use menon_core::verify::{self, CatalogBounds, Outcome};
use menon_core::{Error, Limits, Rational};

/// Overrides the residue, direct-summation and divisor-grid budgets.
pub const BUDGET_ENV: &str = "MENON_BUDGET";
/// Overrides the element budget of subgroup enumeration.
pub const ENUM_BUDGET_ENV: &str = "MENON_ENUM_BUDGET";

pub const RECORD_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "menon",
    version,
    about = "Exact Menon-type sums, identities and cyclic-subgroup counts"
)]
pub struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// (1/M) sum_{k<=M} prod f_i(gcd(g_i(k), m_i)).
    SSum(SumArgs),
    /// The same product summed over k coprime to M, divided by phi(M).
    RSum(SumArgs),
    /// Evaluate both sides of a named identity.
    Identity(IdentityCmd),
    /// Count the cyclic subgroups of C_m1 x ... x C_mr.
    CyclicCount(CyclicArgs),
    /// Run property sweeps.
    Verify(VerifyArgs),
    /// Time the direct and formula paths on one instance.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SumArgs {
    /// Moduli m_1,...,m_r.
    #[arg(long, value_delimiter = ',', required = true)]
    pub moduli: Vec<u64>,
    /// Polynomials g_1,...,g_r in x.
    #[arg(long)]
    pub polys: String,
    /// Functions f_1,...,f_r (id, id^t, one, phi, tau, sigma_k, table:<path>).
    #[arg(long, value_delimiter = ',', required = true)]
    pub funcs: Vec<String>,
    /// Summation modulus, a multiple of lcm(m); defaults to the lcm.
    #[arg(long = "M")]
    pub big_modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t = SumMethod::Formula)]
    pub method: SumMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Formula,
    Direct,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityCmd {
    /// Catalog name, e.g. menon_classic or general_menon.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub moduli: Vec<u64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub shifts: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub exponents: Vec<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long)]
    pub func: Option<String>,
    #[arg(long = "M")]
    pub big_modulus: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct CyclicArgs {
    /// Factor orders m_1,...,m_r.
    #[arg(long, value_delimiter = ',', required = true)]
    pub orders: Vec<u64>,
    #[arg(long, value_enum, default_value_t = CyclicMethod::Formula)]
    pub method: CyclicMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CyclicMethod {
    Formula,
    Burnside,
    Enumerate,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Grid scale; each suite has its own default.
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorems,
    Identities,
    Groups,
    Lemmas,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = BenchKind::RSum)]
    pub kind: BenchKind,
    /// Moduli for the sums.
    #[arg(long, value_delimiter = ',')]
    pub moduli: Vec<u64>,
    /// Polynomials; default `x-1` for every modulus.
    #[arg(long)]
    pub polys: Option<String>,
    /// Functions; default `id` for every modulus.
    #[arg(long, value_delimiter = ',')]
    pub funcs: Vec<String>,
    #[arg(long = "M")]
    pub big_modulus: Option<u64>,
    /// Factor orders for cyclic-count.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<u64>,
    #[arg(long, default_value_t = 3)]
    pub repeat: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchKind {
    SSum,
    RSum,
    CyclicCount,
}

/// Pass/fail tally of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteTally {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl From<&Outcome> for SuiteTally {
    fn from(o: &Outcome) -> Self {
        SuiteTally {
            name: o.name.clone(),
            checked: o.checked,
            failed: o.failures.len() as u64,
            failures: o.failures.clone(),
        }
    }
}

/// Structured result of one invocation. Rationals appear as `{num, den}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub timing_ns: BTreeMap<String, u64>,
    pub suites: Vec<SuiteTally>,
    pub exit_code: i32,
    pub error: Option<String>,
}

impl RunRecord {
    fn new(command: &str) -> Self {
        RunRecord {
            version: RECORD_VERSION,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            timing_ns: BTreeMap::new(),
            suites: Vec::new(),
            exit_code: EXIT_OK,
            error: None,
        }
    }

    fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.to_string(), json!(value));
    }

    fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(key.to_string(), json!(value));
    }
}

/// Everything one invocation produced.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub record: RunRecord,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.record.exit_code
    }

    /// What the binary prints on stdout.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.record).expect("records always serialize") + "\n"
        } else {
            self.text.clone()
        }
    }
}

/// Exit code for a library error.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Budget { .. } | Error::Overflow(_) => EXIT_BUDGET,
        Error::NonExact(_) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

/// Reads the budget overrides from the environment.
pub fn limits_from_env() -> Result<Limits, Error> {
    let mut limits = Limits::default();
    let read = |name: &str| -> Result<Option<u64>, Error> {
        match std::env::var(name) {
            Ok(v) => v.trim().parse::<u64>().map(Some).map_err(|_| {
                Error::InvalidInput(format!("{name} must be a positive integer, got {v:?}"))
            }),
            Err(_) => Ok(None),
        }
    };
    if let Some(b) = read(BUDGET_ENV)? {
        limits.residues = b;
        limits.direct_terms = b;
        limits.divisor_grid = b;
    }
    if let Some(b) = read(ENUM_BUDGET_ENV)? {
        limits.enumeration = b;
    }
    Ok(limits)
}

/// Runs one parsed command line.
pub fn run(cli: &Cli, limits: &Limits) -> Report {
    let name = match &cli.command {
        Command::SSum(_) => "s-sum",
        Command::RSum(_) => "r-sum",
        Command::Identity(_) => "identity",
        Command::CyclicCount(_) => "cyclic-count",
        Command::Verify(_) => "verify",
        Command::Bench(_) => "bench",
    };
    let mut record = RunRecord::new(name);
    let mut text = String::new();
    let started = Instant::now();
    let result = match &cli.command {
        Command::SSum(a) => cmd_sum(a, false, limits, &mut record, &mut text),
        Command::RSum(a) => cmd_sum(a, true, limits, &mut record, &mut text),
        Command::Identity(a) => cmd_identity(a, limits, &mut record, &mut text),
        Command::CyclicCount(a) => cmd_cyclic(a, limits, &mut record, &mut text),
        Command::Verify(a) => cmd_verify(a, limits, &mut record, &mut text),
        Command::Bench(a) => cmd_bench(a, limits, &mut record, &mut text),
    };
    record
        .timing_ns
        .insert("total".into(), started.elapsed().as_nanos() as u64);
    match result {
        Ok(code) => record.exit_code = code,
        Err(e) => {
            record.exit_code = exit_code_for(&e);
            record.error = Some(e.to_string());
        }
    }
    Report { text, record }
}

fn parse_funcs(specs: &[String]) -> Result<Vec<FuncSpec>, Error> {
    specs.iter().map(|s| s.trim().parse()).collect()
}

fn build_instance(
    moduli: &[u64],
    polys: &str,
    funcs: &[String],
    big: Option<u64>,
) -> Result<MenonInstance, Error> {
    let polys: PolySystem = polys.parse()?;
    MenonInstance::new(parse_funcs(funcs)?, polys, moduli.to_vec(), big)
}

fn echo_instance(record: &mut RunRecord, inst: &MenonInstance) {
    record.input("moduli", inst.moduli());
    record.input("polys", inst.polys().to_string());
    let funcs: Vec<String> = inst.funcs().iter().map(|f| f.to_string()).collect();
    record.input("funcs", funcs);
    record.input("M", inst.big_modulus());
}

type SumFn = fn(&MenonInstance, &Limits) -> Result<Rational, Error>;

fn sum_paths(r_sum: bool) -> (SumFn, SumFn) {
    if r_sum {
        (sum_r_direct, sum_r_formula)
    } else {
        (sum_s_direct, sum_s_formula)
    }
}

fn cmd_sum(
    a: &SumArgs,
    r_sum: bool,
    limits: &Limits,
    record: &mut RunRecord,
    text: &mut String,
) -> Result<i32, Error> {
    let inst = build_instance(&a.moduli, &a.polys, &a.funcs, a.big_modulus)?;
    echo_instance(record, &inst);
    record.input("method", format!("{:?}", a.method).to_lowercase());
    let label = if r_sum { "R" } else { "S" };
    let (direct, formula) = sum_paths(r_sum);
    let mut values = Vec::new();
    if matches!(a.method, SumMethod::Formula | SumMethod::Both) {
        let t = Instant::now();
        let v = formula(&inst, limits)?;
        record
            .timing_ns
            .insert("formula".into(), t.elapsed().as_nanos() as u64);
        record.output("formula", v);
        values.push(("formula", v));
    }
    if matches!(a.method, SumMethod::Direct | SumMethod::Both) {
        let t = Instant::now();
        let v = direct(&inst, limits)?;
        record
            .timing_ns
            .insert("direct".into(), t.elapsed().as_nanos() as u64);
        record.output("direct", v);
        values.push(("direct", v));
    }
    if values.len() == 1 {
        text.push_str(&format!("{label} = {}\n", values[0].1));
        record.output("value", values[0].1);
        return Ok(EXIT_OK);
    }
    let agree = values[0].1 == values[1].1;
    for (name, v) in &values {
        text.push_str(&format!("{label} ({name}) = {v}\n"));
    }
    text.push_str(&format!("agree: {}\n", if agree { "yes" } else { "no" }));
    record.output("agree", agree);
    Ok(if agree { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_identity(
    a: &IdentityCmd,
    limits: &Limits,
    record: &mut RunRecord,
    text: &mut String,
) -> Result<i32, Error> {
    let args = IdentityArgs {
        n: a.n,
        moduli: a.moduli.clone(),
        shifts: a.shifts.clone(),
        exponents: a.exponents.clone(),
        j: a.j,
        r: a.r,
        a: a.a,
        b: a.b,
        poly: a.poly.as_deref().map(str::parse::<IntPoly>).transpose()?,
        func: a.func.as_deref().map(str::parse::<FuncSpec>).transpose()?,
        big_modulus: a.big_modulus,
    };
    record.input("name", &a.name);
    let report = named_identity(&a.name, &args, limits)?;
    for (k, v) in &report.parameters {
        record.input(k, v);
    }
    record.output("lhs", report.lhs);
    record.output("rhs", report.rhs);
    record.output("match", report.matched);
    let params: Vec<String> = report
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    text.push_str(&format!(
        "{} {}\nlhs = {}\nrhs = {}\nmatch: {}\n",
        report.identity_name,
        params.join(" "),
        report.lhs,
        report.rhs,
        if report.matched { "yes" } else { "no" }
    ));
    Ok(if report.matched {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_cyclic(
    a: &CyclicArgs,
    limits: &Limits,
    record: &mut RunRecord,
    text: &mut String,
) -> Result<i32, Error> {
    let spec = DirectProductSpec::new(a.orders.clone())?;
    record.input("orders", spec.orders());
    record.input("method", format!("{:?}", a.method).to_lowercase());
    type CountFn = fn(&DirectProductSpec, &Limits) -> Result<u64, Error>;
    let all: [(&str, CountFn); 3] = [
        ("formula", cyclic_count_formula),
        ("burnside", cyclic_count_burnside),
        ("enumerate", cyclic_count_enumerate),
    ];
    let chosen: Vec<(&str, CountFn)> = match a.method {
        CyclicMethod::Formula => vec![all[0]],
        CyclicMethod::Burnside => vec![all[1]],
        CyclicMethod::Enumerate => vec![all[2]],
        CyclicMethod::All => all.to_vec(),
    };
    let mut values = Vec::new();
    for (name, f) in chosen {
        let t = Instant::now();
        let v = f(&spec, limits)?;
        record
            .timing_ns
            .insert(name.into(), t.elapsed().as_nanos() as u64);
        record.output(name, v);
        values.push((name, v));
    }
    if let [(_, v)] = values[..] {
        text.push_str(&format!("{v}\n"));
        return Ok(EXIT_OK);
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    for (name, v) in &values {
        text.push_str(&format!("{name}: {v}\n"));
    }
    text.push_str(&format!("agree: {}\n", if agree { "yes" } else { "no" }));
    record.output("agree", agree);
    Ok(if agree { EXIT_OK } else { EXIT_VIOLATION })
}

/// Runs one suite at the given scale, or its default scale.
pub fn run_suite(suite: Suite, limit: Option<u64>, limits: &Limits) -> Vec<Outcome> {
    match suite {
        Suite::Theorems => {
            let count = limit.unwrap_or(500) as usize;
            vec![
                verify::theorems(count, 24, limits),
                verify::multiplicativity(2, 10, limits),
            ]
        }
        Suite::Identities => vec![verify::identities(
            CatalogBounds::from_limit(limit.unwrap_or(100)),
            limits,
        )],
        Suite::Groups => vec![verify::groups(limit.unwrap_or(500), limits)],
        Suite::Lemmas => vec![verify::lemmas(limit.unwrap_or(200), limits)],
        Suite::All => [
            Suite::Theorems,
            Suite::Identities,
            Suite::Groups,
            Suite::Lemmas,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, limit, limits))
        .collect(),
    }
}

fn cmd_verify(
    a: &VerifyArgs,
    limits: &Limits,
    record: &mut RunRecord,
    text: &mut String,
) -> Result<i32, Error> {
    record.input("suite", format!("{:?}", a.suite).to_lowercase());
    record.input("limit", a.limit);
    let outcomes = run_suite(a.suite, a.limit, limits);
    let mut failed = false;
    for o in &outcomes {
        text.push_str(&format!("{o}\n"));
        for f in &o.failures {
            text.push_str(&format!("  {f}\n"));
        }
        failed |= !o.passed();
        record.suites.push(SuiteTally::from(o));
    }
    record.output("passed", !failed);
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

/// Best-of-`repeat` wall time of `f`, with the value of the last run.
fn time_best<T>(repeat: u32, mut f: impl FnMut() -> Result<T, Error>) -> Result<(T, u64), Error> {
    let mut best = u64::MAX;
    let mut value = None;
    for _ in 0..repeat.max(1) {
        let t = Instant::now();
        let v = f()?;
        best = best.min(t.elapsed().as_nanos() as u64);
        value = Some(v);
    }
    Ok((value.expect("at least one run"), best))
}

fn cmd_bench(
    a: &BenchArgs,
    limits: &Limits,
    record: &mut RunRecord,
    text: &mut String,
) -> Result<i32, Error> {
    record.input("kind", format!("{:?}", a.kind).to_lowercase());
    record.input("repeat", a.repeat);
    let (slow_name, fast_name, slow, fast): (&str, &str, Value, Value);
    let (slow_ns, fast_ns);
    match a.kind {
        BenchKind::SSum | BenchKind::RSum => {
            if a.moduli.is_empty() {
                return Err(Error::InvalidInput("bench needs --moduli".into()));
            }
            let r = a.moduli.len();
            let polys = a.polys.clone().unwrap_or_else(|| vec!["x-1"; r].join(","));
            let funcs = if a.funcs.is_empty() {
                vec!["id".to_string(); r]
            } else {
                a.funcs.clone()
            };
            let inst = build_instance(&a.moduli, &polys, &funcs, a.big_modulus)?;
            echo_instance(record, &inst);
            let (direct, formula) = sum_paths(a.kind == BenchKind::RSum);
            let (dv, dt) = time_best(a.repeat, || direct(&inst, limits))?;
            let (fv, ft) = time_best(a.repeat, || formula(&inst, limits))?;
            if dv != fv {
                text.push_str(&format!("value mismatch: direct {dv}, formula {fv}\n"));
                record.output("direct", dv);
                record.output("formula", fv);
                return Ok(EXIT_VIOLATION);
            }
            (slow_name, fast_name) = ("direct", "formula");
            (slow, fast) = (json!(dv), json!(fv));
            (slow_ns, fast_ns) = (dt, ft);
            text.push_str(&format!("value = {dv}\n"));
        }
        BenchKind::CyclicCount => {
            let spec = DirectProductSpec::new(a.orders.clone())?;
            record.input("orders", spec.orders());
            let (ev, et) = time_best(a.repeat, || cyclic_count_enumerate(&spec, limits))?;
            let (fv, ft) = time_best(a.repeat, || cyclic_count_formula(&spec, limits))?;
            if ev != fv {
                text.push_str(&format!("value mismatch: enumerate {ev}, formula {fv}\n"));
                record.output("enumerate", ev);
                record.output("formula", fv);
                return Ok(EXIT_VIOLATION);
            }
            (slow_name, fast_name) = ("enumerate", "formula");
            (slow, fast) = (json!(ev), json!(fv));
            (slow_ns, fast_ns) = (et, ft);
            text.push_str(&format!("value = {ev}\n"));
        }
    }
    record.output(slow_name, slow);
    record.output(fast_name, fast);
    record.output("equal", true);
    record.timing_ns.insert(slow_name.into(), slow_ns);
    record.timing_ns.insert(fast_name.into(), fast_ns);
    let ratio = slow_ns as f64 / fast_ns.max(1) as f64;
    text.push_str(&format!(
        "{slow_name}: {slow_ns} ns\n{fast_name}: {fast_ns} ns\nratio {slow_name}/{fast_name}: {ratio:.2}\n"
    ));
    Ok(EXIT_OK)
}
