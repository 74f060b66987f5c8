use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sympow::parse::{parse_ideal, IdealDocument};
use sympow::replay::{replay, ReplayStatus};
use sympow::report::{
    entry_text, entry_value, invariants_text, invariants_value, rational_string, tally_text, tally_value,
    to_line, Format, Origin, VERSION,
};
use sympow::scan::{scan, ScanConfig};
use sympow::suite::{canonical_check_name, run_check, run_suite, CheckParams, Entry, Prepared, SuiteOptions, Tally, ALL_CHECKS};
use sympow_core::geometry::{enumerate_vertices, EnumerationBudget, StairsOptions};
use sympow_core::invariants::{alpha, beta, InvariantReport};
use sympow_core::{Error, Limits, MonomialIdeal};

const EXIT_BUG: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "sympow", version, about = "Exact symbolic powers and containment checks for monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include timings (structured output is then no longer reproducible byte for byte).
    #[arg(long)]
    timing: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Ideal file, or `-` for standard input.
    input: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Inclusive range for m, as `lo-hi` or a single value.
    #[arg(long, default_value = "1-3", value_parser = parse_range)]
    m_range: (u32, u32),
    #[arg(long, default_value = "1-3", value_parser = parse_range)]
    t_range: (u32, u32),
    #[arg(long, default_value = "1-3", value_parser = parse_range)]
    r_range: (u32, u32),
    /// Largest m in the α(I^(m)) ≥ m·α(Q) check.
    #[arg(long, default_value_t = 6)]
    alpha_max_m: u32,
    /// Largest m searched for α(I^(m)) = m·α(Q).
    #[arg(long, default_value_t = 12)]
    equality_cap: u32,
    /// Random points per stairs check.
    #[arg(long, default_value_t = 32)]
    samples: usize,
    /// Also run the exhaustive stairs check, up to this many complement cells.
    #[arg(long)]
    exhaustive_cells: Option<u128>,
    /// Checks to run (repeatable); see `--all`.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Run every check.
    #[arg(long)]
    all: bool,
}

impl SweepArgs {
    fn options(&self, seed: u64) -> SuiteOptions {
        SuiteOptions {
            ranges: sympow::suite::ParamRanges {
                m: self.m_range,
                t: self.t_range,
                r: self.r_range,
            },
            alpha_max_m: self.alpha_max_m,
            equality_cap: self.equality_cap,
            stairs: StairsOptions {
                samples: self.samples,
                seed,
                budget: EnumerationBudget::default(),
                exhaustive_cells: self.exhaustive_cells,
            },
            limits: Limits::default(),
        }
    }

    fn selection(&self) -> Result<Vec<&'static str>, Failure> {
        if self.all || self.checks.is_empty() {
            return Ok(ALL_CHECKS.to_vec());
        }
        self.checks
            .iter()
            .map(|c| {
                canonical_check_name(c)
                    .filter(|n| ALL_CHECKS.contains(n))
                    .ok_or_else(|| Failure::usage(format!("unknown check `{c}`; known: {}", ALL_CHECKS.join(", "))))
            })
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generators, decomposition data and degree invariants.
    Info(InputArgs),
    /// Associated primes.
    Ass(InputArgs),
    /// Maximal associated primes.
    Maxass(InputArgs),
    /// Largest height of an associated prime.
    Bigheight(InputArgs),
    /// Fewest variables in the support of a monomial of the ideal.
    Sigma(InputArgs),
    /// Generators of the m-th symbolic power.
    Symbolic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long)]
        m: u32,
    },
    /// Smallest generator degree.
    Alpha(InputArgs),
    /// Largest generator degree.
    Beta(InputArgs),
    /// Waldschmidt constant α(Q), exactly.
    Waldschmidt(InputArgs),
    /// The symbolic polyhedron.
    Polyhedron {
        #[command(flatten)]
        input: InputArgs,
        /// Emit component generators and the vertices in dump format.
        #[arg(long)]
        dump: bool,
    },
    /// Decide I^(m) ⊆ 𝔪^s · I^r.
    Containment {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        r: u32,
    },
    /// Run the check suite on one ideal.
    Suite {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the suite on seeded random ideals.
    Scan {
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of variables, as `lo-hi` or a single value.
        #[arg(long, default_value = "3-5", value_parser = parse_vars)]
        vars: (usize, usize),
        #[arg(long, default_value_t = 2)]
        max_exp: u64,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        /// Square-free ideals only, built from random primes.
        #[arg(long)]
        sqfree: bool,
        /// Where candidate counterexamples and bugs are written (JSON Lines).
        #[arg(long, default_value = "findings.jsonl")]
        findings: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-run every check recorded in a structured report.
    Replay {
        report: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse(), b.trim().parse()),
        None => (s.trim().parse(), s.trim().parse()),
    };
    match (lo, hi) {
        (Ok(lo), Ok(hi)) if lo >= 1 && lo <= hi => Ok((lo, hi)),
        _ => Err(format!("expected `lo-hi` with 1 ≤ lo ≤ hi, got `{s}`")),
    }
}

fn parse_vars(s: &str) -> Result<(usize, usize), String> {
    parse_range(s).map(|(a, b)| (a as usize, b as usize))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_BUG,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<(IdealDocument, MonomialIdeal), Failure> {
    let text = read_input(path)?;
    parse_ideal(&text).map_err(|e| Failure::usage(format!("{}:{e}", path.display())))
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Text or one JSON document, depending on the format.
fn emit_value(out: &OutputArgs, text: String, value: Value) -> Result<(), Failure> {
    match out.format() {
        Format::Text => emit(out, &(text + "\n")),
        Format::Structured => emit(out, &to_line(&value)),
    }
}

fn prepare(ideal: &MonomialIdeal) -> Result<Prepared, Failure> {
    Ok(Prepared::new(ideal, Limits::default())?)
}

fn primes_text(primes: &[sympow_core::MonomialPrime], doc: &IdealDocument) -> Vec<String> {
    primes.iter().map(|p| p.fmt_with(&doc.vars)).collect()
}

fn exit_for(tally: &Tally) -> u8 {
    if tally.bugs > 0 || tally.errors > 0 {
        EXIT_BUG
    } else if tally.resource_limits > 0 {
        EXIT_RESOURCE
    } else {
        0
    }
}

fn cmd_info(a: &InputArgs) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    let p = prepare(&ideal)?;
    let inv = InvariantReport::compute(&p.ctx, &p.polyhedron)?;
    let d = p.ctx.decomposition();
    let ass = primes_text(d.associated_primes(), &doc);
    let maxass = primes_text(d.max_associated_primes(), &doc);
    let mut text = String::new();
    if let Some(label) = &doc.label {
        text.push_str(&format!("label: {label}\n"));
    }
    text.push_str(&format!("ideal: {}\n", ideal.fmt_with(&doc.vars)));
    text.push_str(&format!("variables: {}\n", doc.vars.len()));
    text.push_str(&format!("associated primes: {}\n", ass.join(" ")));
    text.push_str(&format!("maximal associated primes: {}\n", maxass.join(" ")));
    text.push_str(&invariants_text(&inv));
    let mut value = invariants_value(&inv);
    value["type"] = json!("info");
    value["ideal"] = sympow::report::ideal_value(&doc);
    value["associated_primes"] = json!(ass);
    value["max_associated_primes"] = json!(maxass);
    emit_value(&a.out, text, value)?;
    Ok(0)
}

fn cmd_primes(a: &InputArgs, maximal: bool) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    let d = sympow_core::Decomposition::of(&ideal)?;
    let primes = if maximal {
        d.max_associated_primes()
    } else {
        d.associated_primes()
    };
    let names = primes_text(primes, &doc);
    let kind = if maximal { "maxass" } else { "ass" };
    emit_value(&a.out, names.join("\n"), json!({"type": kind, "primes": names}))?;
    Ok(0)
}

fn cmd_number(a: &InputArgs, kind: &str) -> Result<u8, Failure> {
    let (_, ideal) = load(&a.input)?;
    let value: String = match kind {
        "bigheight" => sympow_core::decomposition::big_height(&ideal)?.to_string(),
        "sigma" => sympow_core::decomposition::sigma(&ideal)?.to_string(),
        "alpha" => alpha(&ideal)?.to_string(),
        "beta" => beta(&ideal)?.to_string(),
        "waldschmidt" => rational_string(&sympow_core::invariants::waldschmidt(&ideal)?),
        _ => unreachable!("fixed set of numeric commands"),
    };
    let json_value = value.parse::<i64>().map_or_else(|_| json!(value), |v| json!(v));
    emit_value(&a.out, value, json!({"type": kind, "value": json_value}))?;
    Ok(0)
}

fn cmd_symbolic(a: &InputArgs, m: u32) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    if m == 0 {
        return Err(Failure::usage("m must be at least 1"));
    }
    let ctx = sympow_core::SymbolicContext::new(&ideal)?;
    let power = ctx.symbolic_power(m)?;
    let gens: Vec<String> = power.gens().iter().map(|g| g.fmt_with(&doc.vars)).collect();
    let text = format!("{}\n{} generators", power.fmt_with(&doc.vars), gens.len());
    emit_value(&a.out, text, json!({"type": "symbolic", "m": m, "gens": gens}))?;
    Ok(0)
}

fn cmd_polyhedron(a: &InputArgs, dump: bool) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    let p = prepare(&ideal)?;
    let q = &p.polyhedron;
    let row = |v: &[sympow_core::Rational]| v.iter().map(rational_string).collect::<Vec<_>>().join(" ");
    let vertices = enumerate_vertices(q, &EnumerationBudget::default());
    let mut code = 0;
    if dump {
        let mut text = String::new();
        for (prime, n) in q.components() {
            let names: Vec<&str> = prime.vars().iter().map(|&v| doc.vars[v].as_str()).collect();
            text.push_str(&format!("P {}\n", names.join(" ")));
            for g in n.generators() {
                let ints: Vec<String> = g.exponents().iter().map(ToString::to_string).collect();
                text.push_str(&format!("{}\n", ints.join(" ")));
            }
        }
        text.push_str("V\n");
        match &vertices {
            Ok(vs) => {
                for v in vs {
                    text.push_str(&format!("{}\n", row(v)));
                }
            }
            Err(e) => {
                text.push_str(&format!("# {e}\n"));
                code = EXIT_RESOURCE;
            }
        }
        emit(&a.out, &text)?;
        return Ok(code);
    }
    let alpha = q.alpha()?;
    let mut text = String::new();
    let mut comps = Vec::new();
    for (prime, n) in q.components() {
        let gens: Vec<String> = n.generators().iter().map(|g| g.fmt_with(&doc.vars)).collect();
        text.push_str(&format!("component {}: conv({}) + orthant\n", prime.fmt_with(&doc.vars), gens.join(", ")));
        comps.push(json!({"prime": prime.fmt_with(&doc.vars), "gens": n.generators().iter().map(sympow::parse::vector_form).collect::<Vec<_>>()}));
    }
    text.push_str(&format!("alpha(Q) = {} at ({})", rational_string(&alpha.value), row(&alpha.point)));
    let vertex_value = match &vertices {
        Ok(vs) => {
            text.push_str(&format!("\n{} vertices", vs.len()));
            json!(vs.iter().map(|v| v.iter().map(rational_string).collect::<Vec<_>>()).collect::<Vec<_>>())
        }
        Err(e) => {
            text.push_str(&format!("\nvertices not enumerated: {e}"));
            Value::Null
        }
    };
    let value = json!({
        "type": "polyhedron",
        "components": comps,
        "alpha_Q": rational_string(&alpha.value),
        "minimizer": alpha.point.iter().map(rational_string).collect::<Vec<_>>(),
        "vertices": vertex_value,
    });
    emit_value(&a.out, text, value)?;
    Ok(code)
}

fn render_entries(
    out: &OutputArgs,
    doc: &IdealDocument,
    origin: &Origin,
    entries: &[&Entry],
    buffer: &mut String,
) {
    for e in entries {
        match out.format() {
            Format::Text => {
                buffer.push_str(&entry_text(e, doc));
                buffer.push('\n');
            }
            Format::Structured => buffer.push_str(&to_line(&entry_value(e, doc, origin, out.timing))),
        }
    }
}

fn cmd_containment(a: &InputArgs, m: u32, s: u64, r: u32) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    let p = prepare(&ideal)?;
    let params = CheckParams {
        m: Some(m),
        r: Some(r),
        s: Some(s),
        t: None,
    };
    let options = SuiteOptions::default();
    let entry = Entry {
        name: "containment",
        params,
        outcome: run_check(&p, "containment", &params, &options),
    };
    if let Err(e) = &entry.outcome {
        if !matches!(e, Error::ResourceLimit { .. }) {
            return Err(Failure::usage(e.to_string()));
        }
    }
    let origin = Origin {
        command: "containment",
        seed: None,
        instance: None,
        options,
    };
    let mut buffer = String::new();
    render_entries(&a.out, &doc, &origin, &[&entry], &mut buffer);
    emit(&a.out, &buffer)?;
    let mut tally = Tally::default();
    tally.add_entry(&entry);
    Ok(exit_for(&tally))
}

fn cmd_suite(a: &InputArgs, sweep: &SweepArgs, seed: u64) -> Result<u8, Failure> {
    let (doc, ideal) = load(&a.input)?;
    let selection = sweep.selection()?;
    let options = sweep.options(seed);
    let p = prepare(&ideal)?;
    let report = run_suite(&p, &selection, &options);
    let origin = Origin {
        command: "suite",
        seed: Some(seed),
        instance: None,
        options,
    };
    let tally = report.tally();
    let mut buffer = String::new();
    match a.out.format() {
        Format::Text => {
            buffer.push_str(&format!("ideal: {}\n", ideal.fmt_with(&doc.vars)));
            match &report.invariants {
                Ok(inv) => buffer.push_str(&format!("{}\n", invariants_text(inv))),
                Err(e) => buffer.push_str(&format!("invariants: ERROR: {e}\n")),
            }
        }
        Format::Structured => match &report.invariants {
            Ok(inv) => buffer.push_str(&to_line(&invariants_value(inv))),
            Err(e) => buffer.push_str(&to_line(&json!({"type": "invariants", "error": e.to_string()}))),
        },
    }
    let entries: Vec<&Entry> = report.entries.iter().collect();
    render_entries(&a.out, &doc, &origin, &entries, &mut buffer);
    match a.out.format() {
        Format::Text => buffer.push_str(&format!("summary: {}\n", tally_text(&tally))),
        Format::Structured => {
            let mut v = tally_value(&tally);
            v["type"] = json!("summary");
            buffer.push_str(&to_line(&v));
        }
    }
    emit(&a.out, &buffer)?;
    Ok(exit_for(&tally))
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    count: u64,
    seed: u64,
    vars: (usize, usize),
    max_exp: u64,
    max_gens: usize,
    sqfree: bool,
    findings: &Path,
    sweep: &SweepArgs,
    out: &OutputArgs,
) -> Result<u8, Failure> {
    let config = ScanConfig {
        count,
        seed,
        num_vars: vars,
        max_exponent: max_exp,
        max_gens,
        squarefree_only: sqfree,
        selection: sweep.selection()?,
        suite: sweep.options(seed),
    };
    let outcome = scan(&config)?;
    let mut buffer = String::new();
    let mut found = String::new();
    let header = json!({
        "type": "scan",
        "version": VERSION,
        "count": count,
        "seed": seed,
        "vars": [vars.0, vars.1],
        "max_exp": max_exp,
        "max_gens": max_gens,
        "sqfree": sqfree,
        "checks": config.selection,
    });
    match out.format() {
        Format::Text => buffer.push_str(&format!(
            "scan: count {count}, seed {seed}, vars {}-{}, max-exp {max_exp}, max-gens {max_gens}, sqfree {sqfree}\n",
            vars.0, vars.1
        )),
        Format::Structured => buffer.push_str(&to_line(&header)),
    }
    for inst in &outcome.instances {
        let doc = &inst.instance.doc;
        let origin = Origin {
            command: "scan",
            seed: Some(seed),
            instance: Some(inst.instance.index),
            options: config.suite,
        };
        let tally = inst.tally();
        let mut entries: Vec<&Entry> = inst.crosscheck.iter().collect();
        if let Some(s) = &inst.suite {
            entries.extend(s.entries.iter());
        }
        match out.format() {
            Format::Text => {
                buffer.push_str(&format!(
                    "#{} {}: {}\n",
                    inst.instance.index,
                    doc.ideal().fmt_with(&doc.vars),
                    tally_text(&tally)
                ));
                if let Some(e) = &inst.setup_error {
                    buffer.push_str(&format!("    ERROR: {e}\n"));
                }
                for e in entries.iter().filter(|e| !matches!(&e.outcome, Ok(r) if r.verdict != sympow_core::Verdict::Fails)) {
                    buffer.push_str(&format!("    {}\n", entry_text(e, doc)));
                }
            }
            Format::Structured => {
                let mut v = json!({
                    "type": "instance",
                    "instance": inst.instance.index,
                    "ideal": sympow::report::ideal_value(doc),
                    "summary": tally_value(&tally),
                });
                if let Some(e) = &inst.setup_error {
                    v["error"] = json!(e.to_string());
                }
                if let Some(Ok(inv)) = inst.suite.as_ref().map(|s| &s.invariants) {
                    v["invariants"] = invariants_value(inv);
                }
                buffer.push_str(&to_line(&v));
                render_entries(out, doc, &origin, &entries, &mut buffer);
            }
        }
        for e in &entries {
            if let Ok(r) = &e.outcome {
                if r.is_bug() || r.is_candidate_counterexample() {
                    found.push_str(&to_line(&entry_value(e, doc, &origin, false)));
                }
            }
        }
    }
    match out.format() {
        Format::Text => buffer.push_str(&format!("summary: {}\n", tally_text(&outcome.tally))),
        Format::Structured => {
            let mut v = tally_value(&outcome.tally);
            v["type"] = json!("summary");
            buffer.push_str(&to_line(&v));
        }
    }
    fs::write(findings, found).map_err(|e| Failure::usage(format!("{}: {e}", findings.display())))?;
    emit(out, &buffer)?;
    Ok(exit_for(&outcome.tally))
}

fn cmd_replay(path: &Path, out: &OutputArgs) -> Result<u8, Failure> {
    let text = read_input(path)?;
    let lines = replay(&text);
    let mut buffer = String::new();
    let mut bad = 0;
    for l in &lines {
        let (status, detail) = match &l.status {
            ReplayStatus::Reproduced => ("reproduced", String::new()),
            ReplayStatus::Mismatch { recorded, replayed } => {
                bad += 1;
                ("mismatch", format!("recorded {recorded}, replayed {replayed}"))
            }
            ReplayStatus::Failed(msg) => {
                bad += 1;
                ("failed", msg.clone())
            }
        };
        match out.format() {
            Format::Text => buffer.push_str(&format!("line {:<6}{:<24}{status} {detail}\n", l.line, l.check)),
            Format::Structured => buffer.push_str(&to_line(&json!({
                "type": "replay", "line": l.line, "check": l.check, "status": status, "detail": detail
            }))),
        }
    }
    match out.format() {
        Format::Text => buffer.push_str(&format!("replayed {}, not reproduced {bad}\n", lines.len())),
        Format::Structured => buffer.push_str(&to_line(&json!({
            "type": "summary", "replayed": lines.len(), "not_reproduced": bad
        }))),
    }
    emit(out, &buffer)?;
    Ok(if bad > 0 { EXIT_BUG } else { 0 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Info(a) => cmd_info(a),
        Command::Ass(a) => cmd_primes(a, false),
        Command::Maxass(a) => cmd_primes(a, true),
        Command::Bigheight(a) => cmd_number(a, "bigheight"),
        Command::Sigma(a) => cmd_number(a, "sigma"),
        Command::Alpha(a) => cmd_number(a, "alpha"),
        Command::Beta(a) => cmd_number(a, "beta"),
        Command::Waldschmidt(a) => cmd_number(a, "waldschmidt"),
        Command::Symbolic { input, m } => cmd_symbolic(input, *m),
        Command::Polyhedron { input, dump } => cmd_polyhedron(input, *dump),
        Command::Containment { input, m, s, r } => cmd_containment(input, *m, *s, *r),
        Command::Suite { input, sweep, seed } => cmd_suite(input, sweep, *seed),
        Command::Scan {
            count,
            seed,
            vars,
            max_exp,
            max_gens,
            sqfree,
            findings,
            sweep,
            out,
        } => cmd_scan(*count, *seed, *vars, *max_exp, *max_gens, *sqfree, findings, sweep, out),
        Command::Replay { report, out } => cmd_replay(report, out),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
