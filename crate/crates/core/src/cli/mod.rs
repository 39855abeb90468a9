//! Command-line front end.
//!
//! Exit codes: 0 when every claim matches its expectation, 1 when some claim
//! contradicts it, 2 when some claim is undecided (and none contradicts),
//! 3 on usage, input or parse errors.

mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact::{bernoulli, fmt_rational, parse_rational, Rational};
use crate::interval::Dyadic;
use crate::lang::{bundled, Corpus, BUNDLED_CORPUS};
use crate::prove::{
    identity_check, limit_report, registered_claim, scan_extremum, sequence_check, verify_inequality, Endpoint,
    IdentityId, LimitReport, ProveOptions, SequenceId, SequenceMode, Side, Status, VerifyOptions,
};
use crate::series::{pi_lower, CoeffSeq, SeriesId, Theorem};

pub use report::{Claim, Report, Sharp, WitnessRecord, VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wilker", version, about = "Verify sharp Huygens and Wilker type inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prove corpus inequalities by interval bisection and series certificates.
    Prove(ProveArgs),
    /// Print exact series coefficients as CSV.
    Series(SeriesArgs),
    /// Print Bernoulli numbers as CSV.
    Bernoulli(BernoulliArgs),
    /// Exact monotonicity / positivity checks of proof sequences.
    Sequences(SequenceArgs),
    /// Exact checks of closed-form difference identities.
    Identities(IdentityArgs),
    /// Endpoint limits of the theorem ratios against the sharp constants.
    Limits(LimitArgs),
    /// Sampled extremum scan of a theorem ratio.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format; defaults to json with --out and text otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Record wall time per claim (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
    /// Worker threads for the prover (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct CorpusArg {
    /// Corpus file; the bundled corpus when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct ProveArgs {
    #[command(flatten)]
    corpus: CorpusArg,
    /// Only claims with this name; a trailing `*` matches a prefix. Repeatable.
    #[arg(long)]
    name: Vec<String>,
    /// Margin at both open endpoints.
    #[arg(long, value_parser = rational_arg)]
    eps: Option<Rational>,
    #[arg(long, value_parser = rational_arg)]
    eps_lo: Option<Rational>,
    #[arg(long, value_parser = rational_arg)]
    eps_hi: Option<Rational>,
    /// Cutoff for unbounded domains.
    #[arg(long, value_parser = rational_arg)]
    x_max: Option<Rational>,
    #[arg(long)]
    max_depth: Option<u32>,
    #[arg(long, value_parser = rational_arg)]
    min_width: Option<Rational>,
    /// Outward-rounding precision in bits (at least 64).
    #[arg(long)]
    precision: Option<u32>,
    #[arg(long)]
    max_leaves: Option<usize>,
    /// Taylor-form order used alongside the natural extension (0 disables).
    #[arg(long)]
    taylor_order: Option<usize>,
    /// Skip series certificates near zero.
    #[arg(long)]
    no_near_zero: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    /// Series id, e.g. X_OVER_SIN, CSC3 or T3.4:a.
    #[arg(long)]
    id: String,
    #[arg(long, default_value_t = 20)]
    nmax: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct BernoulliArgs {
    #[arg(long, default_value_t = 20)]
    upto: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SequenceArgs {
    #[command(flatten)]
    corpus: CorpusArg,
    /// Sequence id; every corpus sequence stanza when omitted.
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    nmin: Option<u32>,
    #[arg(long)]
    nmax: Option<u32>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[command(flatten)]
    corpus: CorpusArg,
    /// Identity id; every corpus identity stanza when omitted.
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    nmax: Option<u32>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Theorem (3.1 .. 3.5); all when omitted.
    #[arg(long)]
    theorem: Option<String>,
    /// `zero` or `right`; both where defined when omitted.
    #[arg(long)]
    endpoint: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    corpus: CorpusArg,
    /// Theorem (3.1 .. 3.5); all when omitted.
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long, value_parser = rational_arg)]
    lo: Option<Rational>,
    #[arg(long, value_parser = rational_arg)]
    hi: Option<Rational>,
    #[arg(long, value_parser = rational_arg, default_value = "1e-6")]
    tol: Rational,
    #[command(flatten)]
    output: Output,
}

/// Usage, input and parse errors; all map to exit code 3.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Usage>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Verdict {
    Match,
    Unknown,
    Mismatch,
}

impl Verdict {
    fn exit_code(verdicts: &[Verdict]) -> i32 {
        match verdicts.iter().max() {
            Some(Verdict::Mismatch) => EXIT_MISMATCH,
            Some(Verdict::Unknown) => EXIT_UNKNOWN,
            _ => EXIT_OK,
        }
    }
}

enum Emitted {
    Report(Report, Vec<Verdict>),
    Csv(String),
}

/// Runs one command line (without the program name) against real stdout
/// and stderr and returns the exit code.
pub fn run_command<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run_command`], writing to the given streams.
pub fn run_with_io<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("wilker".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn output_of(cmd: &Command) -> &Output {
    match cmd {
        Command::Prove(a) => &a.output,
        Command::Series(a) => &a.output,
        Command::Bernoulli(a) => &a.output,
        Command::Sequences(a) => &a.output,
        Command::Identities(a) => &a.output,
        Command::Limits(a) => &a.output,
        Command::Scan(a) => &a.output,
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Run<i32> {
    let output = output_of(&cli.command);
    let threads = output.threads;
    if threads == Some(0) {
        return Err(Usage("--threads must be positive".into()));
    }
    let emitted = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Usage(e.to_string()))?
            .install(|| dispatch(&cli.command))?,
        None => dispatch(&cli.command)?,
    };
    let (text, code) = match emitted {
        Emitted::Csv(csv) => {
            if matches!(output.format, Some(Format::Json | Format::Text)) {
                return Err(Usage("this subcommand only emits csv".into()));
            }
            (csv, EXIT_OK)
        }
        Emitted::Report(report, verdicts) => {
            let format = output.format.unwrap_or(if output.out.is_some() { Format::Json } else { Format::Text });
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
                Format::Csv => return Err(Usage("reports are emitted as json or text".into())),
            };
            (text, Verdict::exit_code(&verdicts))
        }
    };
    match &output.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Usage(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(|e| Usage(e.to_string()))?,
    }
    Ok(code)
}

fn dispatch(cmd: &Command) -> Run<Emitted> {
    match cmd {
        Command::Prove(a) => prove(a),
        Command::Series(a) => series(a),
        Command::Bernoulli(a) => Ok(Emitted::Csv(bernoulli_csv(a.upto))),
        Command::Sequences(a) => sequences(a),
        Command::Identities(a) => identities(a),
        Command::Limits(a) => limits(a),
        Command::Scan(a) => scan(a),
    }
}

fn load_corpus(arg: &CorpusArg) -> Run<(Corpus, String)> {
    match &arg.corpus {
        None => Ok((bundled(), "<bundled>".into())),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            let corpus = if text == BUNDLED_CORPUS { bundled() } else { Corpus::parse(&text)? };
            Ok((corpus, path.display().to_string()))
        }
    }
}

fn positive(name: &str, q: &Rational) -> Run<()> {
    if q > &Rational::from_integer(0.into()) {
        Ok(())
    } else {
        Err(Usage(format!("--{name} must be positive")))
    }
}

fn name_matches(filters: &[String], name: &str) -> bool {
    filters.is_empty()
        || filters.iter().any(|f| match f.strip_suffix('*') {
            Some(prefix) => name.starts_with(prefix),
            None => f == name,
        })
}

fn kv(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn prove(a: &ProveArgs) -> Run<Emitted> {
    let (corpus, corpus_name) = load_corpus(&a.corpus)?;
    let mut v = VerifyOptions::default();
    let mut p = ProveOptions::default();
    if let Some(e) = &a.eps {
        v.eps_lo = e.clone();
        v.eps_hi = e.clone();
    }
    if let Some(e) = &a.eps_lo {
        v.eps_lo = e.clone();
    }
    if let Some(e) = &a.eps_hi {
        v.eps_hi = e.clone();
    }
    if let Some(x) = &a.x_max {
        v.x_max = x.clone();
    }
    positive("eps-lo", &v.eps_lo)?;
    positive("eps-hi", &v.eps_hi)?;
    positive("x-max", &v.x_max)?;
    if let Some(d) = a.max_depth {
        if d == 0 {
            return Err(Usage("--max-depth must be positive".into()));
        }
        p.max_depth = d;
    }
    let min_width = a.min_width.clone().unwrap_or_else(|| parse_rational("1e-12").expect("literal"));
    positive("min-width", &min_width)?;
    p.min_width = Dyadic::floor_rational(&min_width, 128);
    if let Some(bits) = a.precision {
        if bits < 64 {
            return Err(Usage("--precision must be at least 64".into()));
        }
        p.precision = bits;
    }
    if let Some(n) = a.max_leaves {
        if n == 0 {
            return Err(Usage("--max-leaves must be positive".into()));
        }
        p.max_leaves = n;
    }
    if let Some(k) = a.taylor_order {
        p.taylor_order = k;
    }
    v.near_zero = !a.no_near_zero;
    v.prove = p;

    let specs: Vec<_> = corpus.inequalities.iter().filter(|s| name_matches(&a.name, &s.name)).collect();
    if specs.is_empty() {
        return Err(Usage("no inequality matches the name filter".into()));
    }
    let mut claims = Vec::new();
    let mut verdicts = Vec::new();
    for spec in specs {
        let r = verify_inequality(spec, &v)?;
        let expected = spec.tag("expected").unwrap_or("proved").to_string();
        let verdict = match (r.status, expected.as_str()) {
            (Status::Proved, "proved") | (Status::Refuted, "refuted") => Verdict::Match,
            (Status::Unknown, _) => Verdict::Unknown,
            _ => Verdict::Mismatch,
        };
        verdicts.push(verdict);
        let mut claim = Claim::from_proof(&spec.name, &r, a.output.timing);
        claim.expected = Some(expected);
        if let Some((thm, side)) = registered_claim(spec) {
            claim.sharp = sharp_for(thm, side).ok();
        }
        claims.push(claim);
    }
    let config = vec![
        kv("subcommand", "prove"),
        kv("corpus", corpus_name),
        kv("name", a.name.join(",")),
        kv("eps_lo", fmt_rational(&v.eps_lo)),
        kv("eps_hi", fmt_rational(&v.eps_hi)),
        kv("x_max", fmt_rational(&v.x_max)),
        kv("max_depth", v.prove.max_depth),
        kv("min_width", fmt_rational(&min_width)),
        kv("precision", v.prove.precision),
        kv("max_leaves", v.prove.max_leaves),
        kv("taylor_order", v.prove.taylor_order),
        kv("near_zero", v.near_zero),
    ];
    Ok(Emitted::Report(Report::new(config, claims), verdicts))
}

fn limit_sharp(r: &LimitReport) -> Sharp {
    let computed = match &r.value_exact {
        Some(q) => fmt_rational(q),
        None => report::interval_text(&r.value_enclosure),
    };
    Sharp { paper_value: r.paper_value.to_string(), computed_enclosure: computed, matches: r.matches_paper }
}

fn sharp_for(thm: Theorem, side: Side) -> crate::Result<Sharp> {
    let endpoint = if side == Side::Lower { Endpoint::Zero } else { Endpoint::Right };
    Ok(limit_sharp(&limit_report(thm, endpoint)?))
}

fn series(a: &SeriesArgs) -> Run<Emitted> {
    let id: SeriesId = a.id.parse()?;
    let seq = CoeffSeq::of(id)?;
    let mut csv = String::from("n,exponent,coefficient\n");
    for n in seq.start..=a.nmax {
        csv.push_str(&format!("{n},{},{}\n", seq.exponent_of(n), fmt_rational(&seq.coeff(n)?)));
    }
    Ok(Emitted::Csv(csv))
}

fn bernoulli_csv(upto: usize) -> String {
    let mut csv = String::from("n,value\n");
    for n in 0..=upto {
        csv.push_str(&format!("{n},{}\n", fmt_rational(&bernoulli(n))));
    }
    csv
}

fn sequences(a: &SequenceArgs) -> Run<Emitted> {
    let (corpus, corpus_name) = load_corpus(&a.corpus)?;
    // (claim name, id, mode, n_min, n_max, stanza)
    let mut jobs = Vec::new();
    match &a.id {
        Some(id) => {
            let seq: SequenceId = id.parse()?;
            let mode = match &a.mode {
                Some(m) => m.clone(),
                None => {
                    let modes: Vec<_> = corpus.sequences.iter().filter(|s| &s.id == id).map(|s| &s.mode).collect();
                    match modes.as_slice() {
                        [m] => (*m).clone(),
                        _ => return Err(Usage("--mode is required for this sequence".into())),
                    }
                }
            };
            let stanza = corpus.sequence(id, &mode, a.nmin);
            let n_max = a.nmax.or(stanza.map(|s| s.n_max)).ok_or_else(|| Usage("--nmax is required".into()))?;
            jobs.push((id.clone(), seq, mode.parse::<SequenceMode>()?, a.nmin, n_max, stanza));
        }
        None => {
            for s in &corpus.sequences {
                jobs.push((s.name.clone(), s.id.parse()?, s.mode.parse()?, s.n_min, a.nmax.unwrap_or(s.n_max), Some(s)));
            }
        }
    }
    let mut claims = Vec::new();
    let mut verdicts = Vec::new();
    for (name, seq, mode, n_min, n_max, stanza) in jobs {
        let r = sequence_check(seq, mode, n_min, n_max)?;
        let mut claim = Claim::new(name, if r.all_pass { "Pass" } else { "Violation" });
        claim.findings.push(format!("{} {} for {} <= n <= {}", seq, mode.name(), r.n_range.0, r.n_range.1));
        claim.findings.push(format!("value at n={}: {}", r.n_range.0, fmt_rational(&r.first_value)));
        if let Some((n, v)) = &r.first_violation {
            claim.findings.push(format!("first_violation n={n} value={}", fmt_rational(v)));
        }
        let expected = stanza.and_then(|s| s.tag("expected")).unwrap_or("pass");
        let verdict = match expected {
            "violation" => {
                let at = stanza.and_then(|s| s.tag("violation_at")).and_then(|v| v.parse::<u32>().ok());
                match (&r.first_violation, at) {
                    (Some((n, _)), Some(want)) if *n == want => Verdict::Match,
                    (Some(_), None) => Verdict::Match,
                    _ => Verdict::Mismatch,
                }
            }
            _ if r.all_pass => Verdict::Match,
            _ => Verdict::Mismatch,
        };
        claim.expected = Some(match stanza.and_then(|s| s.tag("violation_at")) {
            Some(n) => format!("{expected} at n={n}"),
            None => expected.to_string(),
        });
        verdicts.push(verdict);
        claims.push(claim);
    }
    let config = vec![
        kv("subcommand", "sequences"),
        kv("corpus", corpus_name),
        kv("id", a.id.clone().unwrap_or_default()),
        kv("mode", a.mode.clone().unwrap_or_default()),
        kv("n_min", a.nmin.map(|n| n.to_string()).unwrap_or_default()),
        kv("n_max", a.nmax.map(|n| n.to_string()).unwrap_or_default()),
    ];
    Ok(Emitted::Report(Report::new(config, claims), verdicts))
}

fn identities(a: &IdentityArgs) -> Run<Emitted> {
    let (corpus, corpus_name) = load_corpus(&a.corpus)?;
    let mut jobs = Vec::new();
    match &a.id {
        Some(id) => {
            let parsed: IdentityId = id.parse()?;
            let stanza = corpus.identity(id);
            let n_max = a.nmax.or(stanza.map(|s| s.n_max)).ok_or_else(|| Usage("--nmax is required".into()))?;
            jobs.push((id.clone(), parsed, n_max, stanza));
        }
        None => {
            for s in &corpus.identities {
                jobs.push((s.name.clone(), s.id.parse()?, a.nmax.unwrap_or(s.n_max), Some(s)));
            }
        }
    }
    let mut claims = Vec::new();
    let mut verdicts = Vec::new();
    for (name, id, n_max, stanza) in jobs {
        let r = identity_check(id, n_max)?;
        let mut claim = Claim::new(name, if r.holds { "Holds" } else { "Fails" });
        claim.findings.push(format!("checked {} <= n <= {}", r.n_range.0, r.n_range.1));
        if let Some(f) = &r.first_failure {
            claim.findings.push(format!(
                "first_failure {} at n={}: {} != {}",
                f.label,
                f.n,
                fmt_rational(&f.lhs),
                fmt_rational(&f.rhs)
            ));
        }
        let mut failures: Vec<u32> = Vec::new();
        for s in &r.signs {
            let rel = if s.strict { ">" } else { ">=" };
            let ok = s.satisfied.iter().filter(|b| **b).count();
            let mut line = format!("sign {} {rel} 0: {ok} of {} satisfied", s.label, s.satisfied.len());
            for (n, v) in &s.failures {
                line.push_str(&format!("; fails at n={n} ({})", fmt_rational(v)));
                failures.push(*n);
            }
            claim.findings.push(line);
        }
        failures.sort_unstable();
        failures.dedup();
        let expected_failures: Vec<u32> = stanza
            .and_then(|s| s.tag("sign_failures"))
            .map(|v| v.split_whitespace().filter_map(|n| n.parse().ok()).collect())
            .unwrap_or_default();
        let expected = stanza.and_then(|s| s.tag("expected")).unwrap_or("holds");
        let holds_expected = expected == "holds";
        claim.expected = Some(if expected_failures.is_empty() {
            expected.to_string()
        } else {
            format!("{expected}, sign failures at n={:?}", expected_failures)
        });
        verdicts.push(if r.holds == holds_expected && failures == expected_failures {
            Verdict::Match
        } else {
            Verdict::Mismatch
        });
        claims.push(claim);
    }
    let config = vec![
        kv("subcommand", "identities"),
        kv("corpus", corpus_name),
        kv("id", a.id.clone().unwrap_or_default()),
        kv("n_max", a.nmax.map(|n| n.to_string()).unwrap_or_default()),
    ];
    Ok(Emitted::Report(Report::new(config, claims), verdicts))
}

fn theorems(arg: &Option<String>) -> Run<Vec<Theorem>> {
    Ok(match arg {
        Some(t) => vec![t.parse()?],
        None => Theorem::ALL.to_vec(),
    })
}

fn limits(a: &LimitArgs) -> Run<Emitted> {
    let endpoints: Vec<Endpoint> = match &a.endpoint {
        Some(e) => vec![e.parse()?],
        None => vec![Endpoint::Zero, Endpoint::Right],
    };
    let mut claims = Vec::new();
    let mut verdicts = Vec::new();
    for thm in theorems(&a.theorem)? {
        for &ep in &endpoints {
            if ep == Endpoint::Right && thm.is_hyperbolic() && a.endpoint.is_none() {
                continue;
            }
            let r = limit_report(thm, ep)?;
            let mut claim = Claim::new(format!("{}/{}", thm.name(), ep.name()), if r.matches_paper { "Match" } else { "Mismatch" });
            claim.sharp = Some(limit_sharp(&r));
            if let Some(x) = &r.cross_check {
                claim.findings.push(format!("ratio at pi/2: {}", report::interval_text(x)));
            }
            verdicts.push(if r.matches_paper { Verdict::Match } else { Verdict::Mismatch });
            claims.push(claim);
        }
    }
    let config = vec![
        kv("subcommand", "limits"),
        kv("theorem", a.theorem.clone().unwrap_or_default()),
        kv("endpoint", a.endpoint.clone().unwrap_or_default()),
    ];
    Ok(Emitted::Report(Report::new(config, claims), verdicts))
}

/// Default scan window: `[1e-3, π/2 − 1e-3]` (rational inner bound) or `[1e-3, 10]`.
pub fn default_scan_domain(thm: Theorem) -> (Rational, Rational) {
    let eps = parse_rational("1e-3").expect("literal");
    let hi = if thm.is_hyperbolic() {
        Rational::from_integer(10.into())
    } else {
        pi_lower() / Rational::from_integer(2.into()) - &eps
    };
    (eps, hi)
}

fn scan(a: &ScanArgs) -> Run<Emitted> {
    let (corpus, corpus_name) = load_corpus(&a.corpus)?;
    positive("tol", &a.tol)?;
    let mut claims = Vec::new();
    let mut verdicts = Vec::new();
    for thm in theorems(&a.theorem)? {
        let (dlo, dhi) = default_scan_domain(thm);
        let lo = a.lo.clone().unwrap_or(dlo);
        let hi = a.hi.clone().unwrap_or(dhi);
        let r = scan_extremum(thm, &lo, &hi, &a.tol)?;
        let status = if r.sampled_monotone { "Monotone" } else { "NotMonotone" };
        let mut claim = Claim::new(thm.name(), status);
        claim.findings.push(format!("domain [{}, {}], {} grid points", fmt_rational(&lo), fmt_rational(&hi), r.grid_points));
        claim.findings.push(format!("argmin ~ {} value {}", report::dyadic_decimal(&r.argmin), report::interval_text(&r.min_value)));
        claim.findings.push(format!("argmax ~ {} value {}", report::dyadic_decimal(&r.argmax), report::interval_text(&r.max_value)));
        // a refuted theorem cannot have a monotone ratio; every other one should
        let refuted = corpus.inequalities.iter().any(|s| {
            registered_claim(s).is_some_and(|(t, _)| t == thm) && s.expects_refutation()
        });
        claim.expected = Some(if refuted { "NotMonotone" } else { "Monotone" }.into());
        verdicts.push(if r.sampled_monotone != refuted { Verdict::Match } else { Verdict::Mismatch });
        claims.push(claim);
    }
    let config = vec![
        kv("subcommand", "scan"),
        kv("corpus", corpus_name),
        kv("theorem", a.theorem.clone().unwrap_or_default()),
        kv("lo", a.lo.as_ref().map(fmt_rational).unwrap_or_default()),
        kv("hi", a.hi.as_ref().map(fmt_rational).unwrap_or_default()),
        kv("tol", fmt_rational(&a.tol)),
    ];
    Ok(Emitted::Report(Report::new(config, claims), verdicts))
}
