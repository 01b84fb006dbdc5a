mod input;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use foldhard::clique_encoding::CliqueEncoding;
use foldhard::dyck_reduction::rna_to_dyck;
use foldhard::gadget::GadgetParams;
use foldhard::reduction::{self, LengthSchedule, ThresholdReport};
use foldhard::solvers::{dyck_edit_distance, lcs_delta_bitparallel, lcs_matching, rna_fold, rna_score};
use foldhard::verify::{run_suite, Suite, SuiteOptions, SuiteReport, SCHEMA};
use foldhard::{Error, Graph};

/// Longest folding input accepted; the table takes `4 n²` bytes.
const RNA_LIMIT: usize = 10_000;
/// Longest Dyck input accepted.
const DYCK_LIMIT: usize = 5_000;
/// Largest `|X| · |Y|` for which an LCS witness table is built.
const LCS_WITNESS_CELLS: usize = 100_000_000;

#[derive(Parser)]
#[command(name = "foldhard", version, about = "Folding, LCS and Dyck solvers with the clique reduction pipeline")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Problem {
    Rna,
    Lcs,
    Dyck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    CliqueToRna,
    RnaToDyck,
}

#[derive(Subcommand)]
enum Command {
    /// Score every line of an instance file.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        input: PathBuf,
        /// Include the pairs of an optimal solution.
        #[arg(long)]
        emit_witness: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a reduced instance plus a JSON sidecar at `<out>.json`.
    Reduce {
        #[arg(long, value_enum)]
        kind: ReduceKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Clique size for clique-to-rna.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = reduction::DEFAULT_GROWTH)]
        growth: u64,
        /// Refuse to write a reduced instance larger than this.
        #[arg(long, default_value_t = 1 << 28)]
        max_bytes: u64,
    },
    /// Run a seeded verification suite; exits nonzero on any failure.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        /// Guard runs of the gadget suite, in units of the content length.
        #[arg(long, default_value_t = GadgetParams::STANDARD.guard)]
        guard: usize,
        /// Zero fences of the gadget suite, in units of the content length.
        #[arg(long, default_value_t = GadgetParams::STANDARD.fence)]
        fence: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { problem, input, emit_witness, format, out } => {
            let text = input::read(&input)?;
            let rows = solve(problem, &text, emit_witness)?;
            emit(out.as_deref(), &render_solve(problem, &rows, format)?)?;
            Ok(true)
        }
        Command::Reduce { kind, input, out, k, growth, max_bytes } => {
            let text = input::read(&input)?;
            match kind {
                ReduceKind::RnaToDyck => reduce_rna_to_dyck(&text, &out)?,
                ReduceKind::CliqueToRna => {
                    let k = k.context("clique-to-rna needs --k")?;
                    reduce_clique_to_rna(&text, k, growth, max_bytes, &out)?
                }
            }
            Ok(true)
        }
        Command::Verify { suite, seed, trials, guard, fence, format, out } => {
            let opts = SuiteOptions { seed, trials, gadget: GadgetParams { guard, fence } };
            let report = run_suite(suite, &opts);
            emit(out.as_deref(), &render_verify(&report, format)?)?;
            if !report.ok() {
                eprintln!("{}: {} of {} cases failed", report.suite, report.failures.len(), report.cases);
            }
            Ok(report.ok())
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct SolveRow {
    line: usize,
    length: usize,
    score: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lcs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Witness {
    Pairs(Vec<(usize, usize)>),
    Dyck { matched: Vec<(usize, usize)>, substituted: Vec<(usize, usize)>, deleted: Vec<usize> },
}

fn check_len(what: &'static str, line: usize, len: usize, limit: usize) -> Result<()> {
    if len > limit {
        return Err(Error::TooLong { what, len, limit }).with_context(|| format!("line {line}"));
    }
    Ok(())
}

fn solve(problem: Problem, text: &str, witness: bool) -> Result<Vec<SolveRow>> {
    let mut rows = Vec::new();
    match problem {
        Problem::Rna => {
            for (line, s) in input::rna_lines(text)? {
                check_len("folding solver", line, s.len(), RNA_LIMIT)?;
                let (score, folding) = if witness { rna_fold(&s) } else { (rna_score(&s), Default::default()) };
                let witness = witness.then_some(Witness::Pairs(folding.pairs));
                rows.push(SolveRow { line, length: s.len(), score, lcs: None, witness });
            }
        }
        Problem::Lcs => {
            for (line, x, y) in input::lcs_lines(text)? {
                let score = lcs_delta_bitparallel(&x, &y)?;
                let lcs = (x.len() + y.len() - score) / 2;
                let witness = if witness {
                    if x.len().saturating_mul(y.len()) > LCS_WITNESS_CELLS {
                        bail!("line {line}: LCS witness needs |X|·|Y| <= {LCS_WITNESS_CELLS}");
                    }
                    Some(Witness::Pairs(lcs_matching(&x, &y)))
                } else {
                    None
                };
                rows.push(SolveRow { line, length: x.len() + y.len(), score, lcs: Some(lcs), witness });
            }
        }
        Problem::Dyck => {
            for (line, s) in input::dyck_lines(text)? {
                check_len("Dyck solver", line, s.len(), DYCK_LIMIT)?;
                let sol = dyck_edit_distance(&s);
                let score = sol.cost;
                let witness = witness.then_some(Witness::Dyck {
                    matched: sol.matched,
                    substituted: sol.substituted,
                    deleted: sol.deleted,
                });
                rows.push(SolveRow { line, length: s.len(), score, lcs: None, witness });
            }
        }
    }
    Ok(rows)
}

fn pairs_tsv(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(" ")
}

fn render_solve(problem: Problem, rows: &[SolveRow], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let v = json!({ "schema": SCHEMA, "problem": problem, "results": rows });
            Ok(serde_json::to_string_pretty(&v)? + "\n")
        }
        Format::Tsv => {
            let mut out = String::from("line\tlength\tscore");
            let with_witness = rows.iter().any(|r| r.witness.is_some());
            if with_witness {
                out.push_str("\twitness");
            }
            out.push('\n');
            for r in rows {
                write!(out, "{}\t{}\t{}", r.line, r.length, r.score)?;
                match &r.witness {
                    Some(Witness::Pairs(p)) => write!(out, "\t{}", pairs_tsv(p))?,
                    Some(Witness::Dyck { matched, substituted, deleted }) => {
                        let del: Vec<String> = deleted.iter().map(|d| d.to_string()).collect();
                        write!(out, "\tmatched {}; substituted {}; deleted {}", pairs_tsv(matched), pairs_tsv(substituted), del.join(" "))?
                    }
                    None => {}
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_sidecar(out: &Path, value: &serde_json::Value) -> Result<()> {
    let path = sidecar_path(out);
    std::fs::write(&path, serde_json::to_string_pretty(value)? + "\n").with_context(|| format!("writing {}", path.display()))
}

fn reduce_rna_to_dyck(text: &str, out: &Path) -> Result<()> {
    let mut body = String::new();
    let mut rows = Vec::new();
    for (line, s) in input::rna_lines(text)? {
        check_len("folding solver", line, s.len(), RNA_LIMIT)?;
        let d = rna_to_dyck(&s);
        let rna = rna_score(&s);
        writeln!(body, "{d}")?;
        rows.push(json!({
            "line": line,
            "rna_length": s.len(),
            "dyck_length": d.len(),
            "rna": rna,
            "predicted_distance": d.len() / 2 - 2 * rna,
        }));
    }
    std::fs::write(out, body).with_context(|| format!("writing {}", out.display()))?;
    write_sidecar(out, &json!({ "schema": SCHEMA, "kind": "rna-to-dyck", "results": rows }))
}

fn reduce_clique_to_rna(text: &str, k: usize, growth: u64, max_bytes: u64, out: &Path) -> Result<()> {
    let g = Graph::parse(text)?;
    let enc = CliqueEncoding::new(&g, k)?;
    if enc.cliques().is_empty() {
        bail!(Error::NoCliques { k });
    }
    let sched = reduction::make_schedule(&enc, growth)?;
    let counts = enc.counts()?;
    // one byte per symbol plus the trailing newline
    let projected = reduction::projected_len(&sched, &counts, enc.cliques().len());
    if projected + 1 > max_bytes as u128 {
        eprintln!("warning: the reduced instance would take {} bytes, over the --max-bytes budget of {max_bytes}", projected + 1);
        eprintln!("warning: lower --growth or raise --max-bytes; nothing was written");
        return Err(Error::InfeasibleScale { what: "S_G", needed: projected, limit: max_bytes as u128 }.into());
    }
    let report = reduction::thresholds(&enc, &sched)?;
    let s = reduction::build_s_g(&enc, &sched, projected as usize)?;
    let mut body = s.to_nucleotides();
    body.push('\n');
    std::fs::write(out, body).with_context(|| format!("writing {}", out.display()))?;
    write_sidecar(out, &clique_sidecar(&g, k, &enc, &sched, &report, s.len())?)
}

fn clique_sidecar(
    g: &Graph,
    k: usize,
    enc: &CliqueEncoding,
    sched: &LengthSchedule,
    r: &ThresholdReport,
    len: usize,
) -> Result<serde_json::Value> {
    let target = reduction::clique_target(sched, &r.counts, r.cliques, r.c1)?;
    let cliques: Vec<&[usize]> = enc.cliques().iter().map(|c| c.vertices()).collect();
    Ok(json!({
        "schema": SCHEMA,
        "kind": "clique-to-rna",
        "n": g.n(),
        "k": k,
        "cliques": cliques,
        "schedule": sched,
        "counts": r.counts,
        "length": len,
        "c0": r.c0,
        "c1": r.c1,
        "q": r.q,
        "argmin": r.argmin,
        "m1": r.m1.to_string(),
        "m2": r.m2.to_string(),
        "clique_target": target.to_string(),
        "decision": r.decision,
    }))
}

fn render_verify(r: &SuiteReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(r)? + "\n"),
        Format::Tsv => {
            let mut out = String::from("suite\tseed\tcases\tpassed\tfailed\n");
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.suite, r.seed, r.cases, r.passed, r.failures.len())?;
            for f in &r.failures {
                writeln!(out, "failure\t{}\t{}", f.case, f.detail.replace(['\t', '\n'], " "))?;
            }
            Ok(out)
        }
    }
}
