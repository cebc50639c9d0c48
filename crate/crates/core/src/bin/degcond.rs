use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use degcond::catalog::{self, evaluate, registry, Condition, ConditionId, Params};
use degcond::oracles::{forcibly_report, OracleLimits, PropertyId, Requirement};
use degcond::rational::{format_rational, parse_rational};
use degcond::sinks::{bm_sweep, classify, partition_count, partitions, sinks_from, verify_sink_lower_bound, SweepSide};
use degcond::witness::{verify_weak_optimality, witness_for, InstanceStatus, VerifyOptions};
use degcond::{DegreeSequence, Error};
use serde::Serialize;
use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "degcond", version, about = "Degree conditions that force graph properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    #[arg(long)]
    k: Option<usize>,
    /// Binding parameter, `p/q` or integer.
    #[arg(long)]
    b: Option<String>,
    /// Toughness parameter, `p/q` or integer.
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    beta: Option<usize>,
}

impl ParamArgs {
    fn params(&self) -> degcond::Result<Params> {
        Ok(Params {
            k: self.k,
            b: self.b.as_deref().map(parse_rational).transpose()?,
            t: self.t.as_deref().map(parse_rational).transpose()?,
            beta: self.beta,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    MurphyAlpha,
    MurphyTrace,
    CaroWei,
    CliqueLower,
    ChiUpper,
    ChiTrivial,
    ArbUpper,
    ArbTrivial,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a condition or a forcible bound on a sequence.
    Check {
        #[arg(long)]
        seq: String,
        #[arg(long, conflicts_with = "bound", required_unless_present = "bound")]
        cond: Option<ConditionId>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        bound: Option<Bound>,
        /// Include every clause instance in the report.
        #[arg(long)]
        trace: bool,
    },
    /// Test graphicality.
    Graphical {
        #[arg(long)]
        seq: String,
    },
    /// Build one realization.
    Realize {
        #[arg(long)]
        seq: String,
    },
    /// Decide whether every realization has a property.
    Forcibly {
        #[arg(long)]
        seq: String,
        /// `name` or `name:value`, e.g. `hamiltonian`, `k-connected:2`, `tough:3/2`.
        #[arg(long)]
        prop: PropertyId,
        /// Only realizations with this property must have `--prop`.
        #[arg(long)]
        given: Option<PropertyId>,
        /// Largest n for realization enumeration.
        #[arg(long, env = "DEGCOND_MAX_N")]
        max_n: Option<usize>,
    },
    /// Build the extremal graph for one clause instance.
    Witness {
        #[arg(long)]
        cond: ConditionId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        clause: String,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
    },
    /// Check weak optimality over a range of lengths.
    Verify {
        #[arg(long)]
        cond: ConditionId,
        #[command(flatten)]
        params: ParamArgs,
        /// `n`, `lo..hi` or `lo..=hi` (both ends included).
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Largest n at which witness graphs go through the oracles.
        #[arg(long, env = "DEGCOND_MAX_N")]
        max_n: Option<usize>,
    },
    /// Maximal non-forcibly sequences of length n.
    Sinks {
        #[arg(long, conflicts_with = "cond", required_unless_present = "cond")]
        prop: Option<PropertyId>,
        #[arg(long)]
        given: Option<PropertyId>,
        /// Use the requirement of a registry row.
        #[arg(long)]
        cond: Option<ConditionId>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "DEGCOND_MAX_N")]
        max_n: Option<usize>,
    },
    /// Check that every sequence declared by one row is declared by another.
    BmSweep {
        /// `id` or `id:value`, e.g. `tough:1`.
        #[arg(long)]
        from: SweepSide,
        #[arg(long)]
        to: SweepSide,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Sink family for k-edge-connectivity and its lower-bound checks.
    Kriesell {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "DEGCOND_MAX_N")]
        max_n: Option<usize>,
    },
    /// Integer partition count (and optionally the list).
    Partitions {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        list: bool,
    },
    /// Toughness lower bound for a given binding number b >= 2.
    BindTough {
        #[arg(long)]
        b: String,
    },
    /// List the registry.
    Registry,
    /// Compare a row's declared set with the best monotone set of any requirement.
    Explore {
        #[arg(long)]
        cond: ConditionId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        prop: PropertyId,
        #[arg(long)]
        given: Option<PropertyId>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, env = "DEGCOND_MAX_N")]
        max_n: Option<usize>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad length `{t}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

fn requirement(prop: PropertyId, given: Option<PropertyId>) -> Requirement {
    match given {
        Some(g) => Requirement::implies(g, prop),
        None => Requirement::has(prop),
    }
}

fn seq(text: &str) -> degcond::Result<DegreeSequence> {
    DegreeSequence::parse(text)
}

/// One finished command: the report to print and the exit status.
struct Outcome {
    json: serde_json::Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn new(value: &impl Serialize, text: String, ok: bool) -> anyhow::Result<Self> {
        Ok(Outcome { json: serde_json::to_value(value)?, text, code: if ok { 0 } else { 1 } })
    }
}

fn progress(msg: &str) {
    eprintln!("{msg}");
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Check { seq: text, cond, params, bound, trace } => {
            let pi = seq(&text)?;
            if let Some(b) = bound {
                return check_bound(b, &pi);
            }
            let id = cond.context("missing --cond")?;
            let verdict = evaluate(id, &params.params()?, &pi)?;
            let verdict = if trace { verdict } else { verdict.without_trace() };
            let mut text = match &verdict.failing_clause {
                None => format!("{id}: declared"),
                Some(f) => format!("{id}: not declared, fails {f}"),
            };
            for t in &verdict.trace {
                let at = match (t.i, t.j) {
                    (Some(i), Some(j)) => format!("(i={i}, j={j})"),
                    (Some(i), None) => format!("(i={i})"),
                    _ => String::new(),
                };
                let cons = t.consequent.map_or("-".to_string(), |c| c.to_string());
                let _ = write!(text, "\n  {}{at}: antecedent {} consequent {cons}", t.clause, t.antecedent);
            }
            Outcome::new(&verdict, text, verdict.declared)
        }
        Command::Graphical { seq: text } => {
            let pi = seq(&text)?;
            let g = pi.is_graphical();
            #[derive(Serialize)]
            struct R {
                sequence: DegreeSequence,
                graphical: bool,
            }
            let t = format!("{pi}: {}", if g { "graphical" } else { "not graphical" });
            Outcome::new(&R { sequence: pi, graphical: g }, t, g)
        }
        Command::Realize { seq: text } => {
            let pi = seq(&text)?;
            let g = pi.realize()?;
            let t = format!("{pi}: n = {}, edges {:?}", g.n(), g.edges());
            Outcome::new(&g, t, true)
        }
        Command::Forcibly { seq: text, prop, given, max_n } => {
            let pi = seq(&text)?;
            let mut limits = OracleLimits::default();
            if let Some(m) = max_n {
                limits.realizations = m;
            }
            let req = requirement(prop, given);
            let r = forcibly_report(req, &pi, &limits)?;
            let mut t = format!(
                "{pi}: {} {req} ({} realizations checked)",
                if r.holds { "forcibly" } else { "not forcibly" },
                r.realizations_checked
            );
            if let Some(g) = &r.counterexample {
                let _ = write!(t, "\ncounterexample: {}", serde_json::to_string(g)?);
            }
            Outcome::new(&r, t, r.holds)
        }
        Command::Witness { cond, params, n, clause, i, j } => {
            let w = witness_for(cond, &params.params()?, n, &clause, i, j)?;
            let t = format!("{}\nsequence {}\ngraph {}", w.recipe, w.sequence, serde_json::to_string(&w.graph)?);
            Outcome::new(&w, t, true)
        }
        Command::Verify { cond, params, n, max_n } => {
            let params = params.params()?;
            let opts = VerifyOptions { oracle_max_n: max_n.unwrap_or(VerifyOptions::default().oracle_max_n) };
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            let mut text = String::new();
            for len in n {
                progress(&format!("verify {cond} n={len}"));
                match verify_weak_optimality(cond, &params, len, &opts) {
                    Ok(r) => {
                        let tally = |s: InstanceStatus| r.instances.iter().filter(|c| c.status == s).count();
                        let _ = writeln!(
                            text,
                            "n={len}: {} ({} witnessed, {} covered, {} vacuous)",
                            if r.passed { "PASS" } else { "FAIL" },
                            tally(InstanceStatus::Witnessed),
                            tally(InstanceStatus::Covered),
                            tally(InstanceStatus::Vacuous),
                        );
                        for v in &r.violations {
                            let _ = writeln!(text, "  {v}");
                        }
                        reports.push(r);
                    }
                    Err(
                        e @ (Error::SequenceTooShort { .. }
                        | Error::LengthOutOfDomain { .. }
                        | Error::ParamOutOfRange(_)),
                    ) => {
                        let _ = writeln!(text, "n={len}: skipped ({e})");
                        skipped.push((len, e.to_string()));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if reports.is_empty() {
                bail!("no length in range is admissible for {cond}");
            }
            let ok = reports.iter().all(|r| r.passed);
            let _ = write!(text, "{}", if ok { "PASS" } else { "FAIL" });
            #[derive(Serialize)]
            struct R<'a> {
                passed: bool,
                reports: &'a [degcond::witness::OptimalityReport],
                skipped: &'a [(usize, String)],
            }
            Outcome::new(&R { passed: ok, reports: &reports, skipped: &skipped }, text, ok)
        }
        Command::Sinks { prop, given, cond, params, n, max_n } => {
            let req = match (prop, cond) {
                (Some(p), _) => requirement(p, given),
                (None, Some(c)) => c.requirement(&params.params()?)?,
                (None, None) => bail!("give --prop or --cond"),
            };
            let max_n = max_n.unwrap_or(7);
            if n > max_n {
                return Err(Error::ScaleExceeded { n, limit: max_n }.into());
            }
            let classified = classify(req, n, &OracleLimits::default().raised_to(n))?;
            let r = sinks_from(req, n, &classified);
            let mut t = format!("{req}, n = {n}: {} sink(s)", r.count);
            for s in &r.sinks {
                let _ = write!(t, "\n  {s}");
            }
            Outcome::new(&r, t, true)
        }
        Command::BmSweep { from, to, n } => {
            progress(&format!("sweeping {from} -> {to}"));
            let r = bm_sweep(from, to, n)?;
            let mut t = format!(
                "{from} => {to}: {} ({} sequences checked)",
                if r.holds { "containment holds" } else { "containment FAILS" },
                r.checked
            );
            for c in &r.counterexamples {
                let _ = write!(t, "\n  n={} {} fails {}", c.n, c.sequence, c.fails);
            }
            Outcome::new(&r, t, r.holds)
        }
        Command::Kriesell { k, n, max_n } => {
            let r = verify_sink_lower_bound(k, n, max_n.unwrap_or(7))?;
            let mut t = format!("k={k}, n={n}: {} members, p({}) = {}", r.count, k - 1, r.expected);
            for m in &r.family {
                let _ = write!(t, "\n  {:?} {}", m.partition, m.sequence);
            }
            let oracle = match r.oracle_confirmed {
                Some(true) => "confirmed",
                Some(false) => "NOT confirmed",
                None => "beyond scale",
            };
            let _ = write!(
                t,
                "\nincomparable {}, claim patterns {} {}, oracle {oracle}\n{}",
                r.pairwise_incomparable,
                r.claim.patterns,
                if r.claim.counterexample.is_none() { "ok" } else { "violated" },
                if r.passed { "PASS" } else { "FAIL" }
            );
            Outcome::new(&r, t, r.passed)
        }
        Command::Partitions { r, list } => {
            let count = partition_count(r)?;
            let parts = if list { Some(partitions(r)) } else { None };
            let mut t = format!("p({r}) = {count}");
            for p in parts.iter().flatten() {
                let _ = write!(t, "\n  {p:?}");
            }
            #[derive(Serialize)]
            struct R {
                r: usize,
                count: String,
                #[serde(skip_serializing_if = "Option::is_none")]
                partitions: Option<Vec<Vec<usize>>>,
            }
            Outcome::new(&R { r, count: count.to_string(), partitions: parts }, t, true)
        }
        Command::BindTough { b } => {
            let b = parse_rational(&b)?;
            let v = catalog::binding_toughness_bound(b)?;
            let s = format_rational(&v);
            Outcome::new(&serde_json::json!({ "b": format_rational(&b), "toughness": s }), s.clone(), true)
        }
        Command::Registry => {
            let rows = registry();
            let mut t = String::new();
            for r in &rows {
                let _ = writeln!(
                    t,
                    "{:<10} {:<6} {} ({})",
                    r.id.id(),
                    format!("{:?}", r.param).to_lowercase(),
                    r.statement,
                    r.domain
                );
            }
            Outcome::new(&rows, t.trim_end().to_string(), true)
        }
        Command::Explore { cond, params, prop, given, n, max_n } => {
            explore(cond, params.params()?, requirement(prop, given), n, max_n.unwrap_or(7))
        }
    }
}

fn check_bound(b: Bound, pi: &DegreeSequence) -> anyhow::Result<Outcome> {
    use degcond::catalog as c;
    if let Bound::MurphyTrace = b {
        let trace = c::murphy_f_trace(pi)?;
        let t = trace.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ");
        return Outcome::new(&trace, format!("({t})"), true);
    }
    let r = match b {
        Bound::MurphyAlpha => c::murphy_alpha(pi)?,
        Bound::CaroWei => c::caro_wei(pi)?,
        Bound::CliqueLower => c::clique_chromatic_lower(pi)?,
        Bound::ChiUpper => c::welsh_powell_chi_upper(pi)?,
        Bound::ChiTrivial => c::chi_trivial_upper(pi)?,
        Bound::ArbUpper => c::arboricity_upper(pi)?,
        Bound::ArbTrivial => c::arboricity_trivial_upper(pi)?,
        Bound::MurphyTrace => unreachable!(),
    };
    Outcome::new(&r, r.to_string(), true)
}

/// Unsound declarations and optimality gaps of a row against the sinks of
/// an arbitrary requirement.
fn explore(
    id: ConditionId,
    params: Params,
    req: Requirement,
    ns: RangeInclusive<usize>,
    max_n: usize,
) -> anyhow::Result<Outcome> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        sinks: Vec<DegreeSequence>,
        unsound: Vec<DegreeSequence>,
        gaps: Vec<DegreeSequence>,
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in ns {
        if n > max_n {
            return Err(Error::ScaleExceeded { n, limit: max_n }.into());
        }
        let cond = match Condition::new(id, &params, n) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(text, "n={n}: skipped ({e})");
                continue;
            }
        };
        progress(&format!("explore {id} against {req}, n={n}"));
        let classified = classify(req, n, &OracleLimits::default().raised_to(n))?;
        let report = sinks_from(req, n, &classified);
        let mut row = Row { n, sinks: report.sinks.clone(), unsound: Vec::new(), gaps: Vec::new() };
        for c in &classified {
            let declared = cond.declares(&c.sequence)?;
            if declared && !c.forcibly() {
                row.unsound.push(c.sequence.clone());
            } else if !declared && !report.covers(&c.sequence) {
                row.gaps.push(c.sequence.clone());
            }
        }
        let _ =
            writeln!(text, "n={n}: {} sinks, {} unsound, {} gaps", row.sinks.len(), row.unsound.len(), row.gaps.len());
        for s in &row.unsound {
            let _ = writeln!(text, "  unsound {s}");
        }
        for s in &row.gaps {
            let _ = writeln!(text, "  gap {s}");
        }
        rows.push(row);
    }
    let exact = rows.iter().all(|r| r.unsound.is_empty() && r.gaps.is_empty());
    let _ =
        write!(text, "{}", if exact { "declared set is best monotone on this range" } else { "declared set differs" });
    Outcome::new(&rows, text, exact)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("json value"),
        Format::Text => outcome.text,
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, format!("{body}\n")),
        None => writeln!(std::io::stdout(), "{body}"),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code)
}
