//! Command-line front end: verdicts, tables, multiplicities, per-pair
//! lattice exploration, stabilizer structures and the self-test suite.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use tripleflag::descent::{self, ProbeReport, RuleRecord, Witness};
use tripleflag::repmult::{self, ProbeOutcome, WorkBound};
use tripleflag::tables::{
    default_root_systems, gamma_row, gamma_text, theta_family_rows, theta_row, GammaRow,
};
use tripleflag::{
    selftest, weyl, DescentVerdict, Error, LatticeIndex, RootCoords, RootSystem, VerdictOptions,
    Weight, WeylElement,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tripleflag",
    version,
    about = "Descent of line bundles on (G/B)^3 // G"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether L(lambda, mu, nu) descends.
    Check(CheckArgs),
    /// Print the Gamma table or the highest-root table.
    Tables(TablesArgs),
    /// Invariant dimension of V(lambda) (x) V(mu) (x) V(nu) and the semistability probe.
    Mult(MultArgs),
    /// For every (w1, w2), the generic lattice L_x and the pairing's membership in it.
    Explore(ExploreArgs),
    /// Structure of the torus subgroup cut out by a set of roots.
    Stab(StabArgs),
    /// Run the embedded example suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Weight,
    Root,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Gamma,
    Theta,
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// Comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    /// Coordinates of the weight arguments.
    #[arg(long, value_enum, default_value = "weight")]
    basis: Basis,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "type")]
    type_spec: String,
    #[command(flatten)]
    weights: WeightArgs,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, default_value_t = 1_000_000)]
    size_bound: u128,
    /// Also run the semistability probe.
    #[arg(long)]
    probe: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct TablesArgs {
    #[arg(long, value_enum)]
    what: TableKind,
    #[arg(long = "type")]
    type_spec: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct MultArgs {
    #[arg(long = "type")]
    type_spec: String,
    #[command(flatten)]
    weights: WeightArgs,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    /// Accept dominant (not necessarily regular) weights; the probe is
    /// skipped for non-regular input.
    #[arg(long)]
    allow_dominant: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct ExploreArgs {
    #[arg(long = "type")]
    type_spec: String,
    #[arg(long, allow_hyphen_values = true, requires_all = ["mu", "nu"])]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["lambda", "nu"])]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["lambda", "mu"])]
    nu: Option<String>,
    #[arg(long, value_enum, default_value = "weight")]
    basis: Basis,
    #[arg(long, default_value_t = 1_000_000)]
    size_bound: u128,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct StabArgs {
    #[arg(long = "type")]
    type_spec: String,
    /// Roots such as `a1,a2,a1+a2,2a1+a2`; empty for the whole torus.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    roots: String,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
}

/// Exit code with the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn ok(stdout: String) -> Self {
        RunOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        RunOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GroupTooLarge { .. }
        | Error::WorkBoundExceeded { .. }
        | Error::ProbeAborted { .. } => EXIT_BOUND,
        Error::VerdictIncomplete { source, .. } => exit_code(source),
        _ => EXIT_USAGE,
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunOutput::fail(EXIT_USAGE, text)
            } else {
                RunOutput::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Check(a) => check(a),
        Command::Tables(a) => tables(a),
        Command::Mult(a) => mult(a),
        Command::Explore(a) => explore(a),
        Command::Stab(a) => stab(a),
        Command::Selftest(a) => return selftest_cmd(a),
    };
    match result {
        Ok(out) => RunOutput::ok(out),
        Err(Failure::Usage(msg)) => RunOutput::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Core(e)) => RunOutput::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn root_system(spec: &str) -> CliResult<RootSystem> {
    Ok(RootSystem::from_label(spec.trim())?)
}

fn parse_vector(name: &str, text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("--{name}: cannot parse {s:?} as an integer")))
        })
        .collect()
}

fn parse_weight(rs: &RootSystem, name: &str, text: &str, basis: Basis) -> CliResult<Weight> {
    let v = parse_vector(name, text)?;
    if v.len() != rs.rank() {
        return Err(Failure::Usage(format!(
            "--{name}: expected {} coordinates, found {}",
            rs.rank(),
            v.len()
        )));
    }
    Ok(match basis {
        Basis::Weight => Weight(v),
        Basis::Root => rs.root_to_weight_coords(&RootCoords(v))?,
    })
}

fn parse_triple(rs: &RootSystem, w: &WeightArgs) -> CliResult<[Weight; 3]> {
    Ok([
        parse_weight(rs, "lambda", &w.lambda, w.basis)?,
        parse_weight(rs, "mu", &w.mu, w.basis)?,
        parse_weight(rs, "nu", &w.nu, w.basis)?,
    ])
}

/// Parses `a1`, `2a1+a2`, `a1-a3` into simple-root coordinates.
pub fn parse_root(rank: usize, text: &str) -> Result<RootCoords, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty root".into());
    }
    let mut coords = vec![0i64; rank];
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' if !first => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(format!("{text:?}: expected + or -")),
        };
        first = false;
        let digits = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let coef: i64 = if digits == 0 {
            1
        } else {
            rest[..digits]
                .parse()
                .map_err(|_| format!("{text:?}: bad coefficient"))?
        };
        rest = &rest[digits..];
        rest = rest
            .strip_prefix('a')
            .or_else(|| rest.strip_prefix('α'))
            .ok_or_else(|| format!("{text:?}: expected a simple root a<i>"))?;
        let digits = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let index: usize = rest[..digits]
            .parse()
            .map_err(|_| format!("{text:?}: missing simple root index"))?;
        if index == 0 || index > rank {
            return Err(format!("{text:?}: index {index} outside 1..={rank}"));
        }
        coords[index - 1] += sign * coef;
        rest = &rest[digits..];
    }
    Ok(RootCoords(coords))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn vec_text(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn word_text(w: &WeylElement) -> String {
    if w.is_identity() {
        "e".to_string()
    } else {
        let parts: Vec<String> = w.one_based_word().iter().map(|i| format!("s{i}")).collect();
        parts.join(" ")
    }
}

fn bool_text(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn probe_text(p: &ProbeReport) -> String {
    match p {
        ProbeReport::NonEmpty { n } => format!("invariants in degree N = {n}"),
        ProbeReport::EmptyUpTo { n_max } => format!("no invariants for N <= {n_max}"),
        ProbeReport::Aborted { n, error } => format!("aborted at N = {n}: {error}"),
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Memberships { checks } => {
            let parts: Vec<String> = checks
                .iter()
                .map(|c| {
                    let name = serde_json::to_value(c.lattice).expect("lattice name");
                    let rel = if c.member { "in" } else { "not in" };
                    format!(
                        "{} {rel} {}",
                        vec_text(c.vector.coords()),
                        name.as_str().unwrap_or("")
                    )
                })
                .collect();
            parts.join("; ")
        }
        Witness::AllPairsHold { pairs_checked } => {
            format!("all {pairs_checked} distinct pairings lie in Gamma")
        }
        Witness::Counterexample { w1, w2, pairing } => format!(
            "w1 = {}, w2 = {}: {} not in Gamma",
            word_text(w1),
            word_text(w2),
            vec_text(pairing.coords())
        ),
        Witness::Probe { outcome } => probe_text(outcome),
        Witness::Skipped { reason } => format!("skipped: {reason}"),
    }
}

fn reason_line(r: &RuleRecord) -> String {
    let rule = serde_json::to_value(r.rule).expect("rule name");
    format!(
        "  {:<18} {:<5}  {}",
        rule.as_str().unwrap_or(""),
        bool_text(r.result),
        witness_text(&r.witness)
    )
}

/// Human-readable rendering of a verdict.
pub fn verdict_text(v: &DescentVerdict) -> String {
    let mut out = String::new();
    writeln!(out, "type: {}{}", v.family, v.rank).unwrap();
    writeln!(
        out,
        "lambda: {}  mu: {}  nu: {}",
        vec_text(v.lambda.coords()),
        vec_text(v.mu.coords()),
        vec_text(v.nu.coords())
    )
    .unwrap();
    writeln!(out, "outcome: {:?}", v.outcome).unwrap();
    writeln!(out, "reasons:").unwrap();
    for r in &v.reasons {
        writeln!(out, "{}", reason_line(r)).unwrap();
    }
    out
}

fn check(a: CheckArgs) -> CliResult<String> {
    let rs = root_system(&a.type_spec)?;
    let [l, m, n] = parse_triple(&rs, &a.weights)?;
    let options = VerdictOptions {
        n_max: a.n_max,
        size_bound: a.size_bound,
        run_probe: a.probe,
        work_bound: WorkBound::default(),
    };
    let v = descent::verdict(&rs, &l, &m, &n, options)?;
    Ok(match a.output {
        OutputFormat::Json => to_json(&v),
        OutputFormat::Text => verdict_text(&v),
    })
}

fn tables(a: TablesArgs) -> CliResult<String> {
    let systems = match &a.type_spec {
        Some(t) => vec![root_system(t)?],
        None => default_root_systems(),
    };
    match a.what {
        TableKind::Theta => Ok(match (a.output, &a.type_spec) {
            (OutputFormat::Json, Some(_)) => to_json(&systems[0]),
            (OutputFormat::Json, None) => to_json(&systems),
            (OutputFormat::Text, Some(_)) => format!("{}\n", theta_row(&systems[0])),
            (OutputFormat::Text, None) => {
                let mut s = theta_family_rows().join("\n");
                s.push('\n');
                s
            }
        }),
        TableKind::Gamma => {
            let rows: Vec<GammaRow> = systems.iter().map(gamma_row).collect::<Result<_, _>>()?;
            Ok(match a.output {
                OutputFormat::Json => to_json(&rows),
                OutputFormat::Text => gamma_text(&rows),
            })
        }
    }
}

fn big_json(n: &impl ToString) -> Value {
    let text = n.to_string();
    match text.parse::<u64>() {
        Ok(v) => json!(v),
        Err(_) => json!(text),
    }
}

fn mult(a: MultArgs) -> CliResult<String> {
    let rs = root_system(&a.type_spec)?;
    let [l, m, n] = parse_triple(&rs, &a.weights)?;
    let regular = [&l, &m, &n].iter().all(|w| w.is_dominant_regular());
    if !a.allow_dominant {
        if let Some(w) = [&l, &m, &n].into_iter().find(|w| !w.is_dominant_regular()) {
            return Err(Error::NotDominantRegular(w.0.clone()).into());
        }
    }
    let bound = WorkBound::default();
    let dim = repmult::triple_invariant_dim(&rs, &l, &m, &n, bound)?;
    let probe: Option<ProbeOutcome> = if regular {
        Some(repmult::semistable_probe(&rs, &l, &m, &n, a.n_max, bound)?)
    } else {
        None
    };
    Ok(match a.output {
        OutputFormat::Json => to_json(&json!({
            "type": rs.family(),
            "rank": rs.rank(),
            "lambda": l,
            "mu": m,
            "nu": n,
            "invariant_dim": big_json(&dim),
            "probe": probe,
        })),
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "type: {}", rs.label()).unwrap();
            writeln!(
                out,
                "lambda: {}  mu: {}  nu: {}",
                vec_text(l.coords()),
                vec_text(m.coords()),
                vec_text(n.coords())
            )
            .unwrap();
            writeln!(out, "invariant dimension: {dim}").unwrap();
            let probe = match probe {
                Some(p) => probe_text(&ProbeReport::from(p)),
                None => "skipped (weights not regular)".to_string(),
            };
            writeln!(out, "probe: {probe}").unwrap();
            out
        }
    })
}

#[derive(Serialize)]
struct ExploreRow {
    w1: WeylElement,
    w2: WeylElement,
    lattice: tripleflag::IntegerLattice,
    index_in_q: LatticeIndex,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairing: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairing_in_lattice: Option<bool>,
}

fn explore(a: ExploreArgs) -> CliResult<String> {
    let rs = root_system(&a.type_spec)?;
    let weights = match (&a.lambda, &a.mu, &a.nu) {
        (Some(l), Some(m), Some(n)) => Some([
            parse_weight(&rs, "lambda", l, a.basis)?,
            parse_weight(&rs, "mu", m, a.basis)?,
            parse_weight(&rs, "nu", n, a.basis)?,
        ]),
        _ => None,
    };
    let order = rs.weyl_group_order();
    let pairs = order.saturating_mul(order);
    if pairs > a.size_bound {
        return Err(Error::GroupTooLarge {
            order: pairs,
            bound: a.size_bound,
        }
        .into());
    }
    let q = tripleflag::lattices::root_lattice(&rs);
    let elements: Vec<WeylElement> = weyl::enumerate(&rs, a.size_bound)?.collect();
    let mut rows = Vec::with_capacity(elements.len() * elements.len());
    for w1 in &elements {
        for w2 in &elements {
            let lattice = descent::generic_pair_lattice(&rs, w1, w2)?;
            let index_in_q = lattice.index_in(&q)?;
            let (pairing, member) = match &weights {
                Some([l, m, n]) => {
                    let p = descent::pairing_character(&rs, l, m, n, w1, w2)?;
                    let member = lattice.contains(p.coords())?;
                    (Some(p), Some(member))
                }
                None => (None, None),
            };
            rows.push(ExploreRow {
                w1: w1.clone(),
                w2: w2.clone(),
                lattice,
                index_in_q,
                pairing,
                pairing_in_lattice: member,
            });
        }
    }
    Ok(match a.output {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Text => {
            let mut out = String::new();
            for r in &rows {
                let basis: Vec<String> = r
                    .lattice
                    .basis_strings()
                    .iter()
                    .map(|b| format!("({})", b.join(",")))
                    .collect();
                let basis = if basis.is_empty() {
                    "{0}".to_string()
                } else {
                    basis.join(" ")
                };
                write!(
                    out,
                    "w1 = {:<12} w2 = {:<12} [Q:L] = {:<8} basis = {}",
                    word_text(&r.w1),
                    word_text(&r.w2),
                    r.index_in_q.to_string(),
                    basis
                )
                .unwrap();
                if let (Some(p), Some(m)) = (&r.pairing, r.pairing_in_lattice) {
                    write!(out, "  pairing {} in L: {m}", vec_text(p.coords())).unwrap();
                }
                out.push('\n');
            }
            out
        }
    })
}

fn stab(a: StabArgs) -> CliResult<String> {
    let rs = root_system(&a.type_spec)?;
    let roots: Vec<RootCoords> = a
        .roots
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_root(rs.rank(), s).map_err(Failure::Usage))
        .collect::<CliResult<_>>()?;
    let s = descent::stabilizer_structure(&rs, &roots)?;
    Ok(match a.output {
        OutputFormat::Json => to_json(&s),
        OutputFormat::Text => format!(
            "torus_rank: {}\nfinite_factors: {:?}\ndivisible: {}\n",
            s.torus_rank, s.finite_factors, s.divisible
        ),
    })
}

fn selftest_cmd(a: SelftestArgs) -> RunOutput {
    let report = selftest::run();
    let stdout = match a.output {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &report.cases {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", c.name, c.detail).unwrap();
            }
            writeln!(out, "{} passed, {} failed", report.passed, report.failed).unwrap();
            out
        }
    };
    RunOutput {
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_SELFTEST
        },
        stdout,
        stderr: String::new(),
    }
}
