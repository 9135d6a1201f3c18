//! `cei`: compute exact graph invariants for piped graph6 streams, emit the
//! extremal constructions, enumerate small graph classes, and verify the
//! extremal claims exhaustively.
//!
//! Exit codes: 0 success / claim confirmed, 1 usage or input error,
//! 2 claim refuted, 3 empty class.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use serde::Serialize;

use cei_core::graph::Graph;
use cei_core::invariants::{self, ClassKind, ClassSpec, Rational};
use cei_core::search::{self, SearchConfig, Verdict};
use cei_core::{canonical_form, constructions, graph6};

const EXIT_REFUTED: u8 = 2;
const EXIT_EMPTY: u8 = 3;

#[derive(Parser)]
#[command(name = "cei", version, about = "Exact connective eccentricity index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants for a newline-delimited graph6 stream
    Compute {
        /// Which invariants to report
        #[arg(long, value_enum, default_value_t = Selector::All)]
        index: Selector,
        /// Input file; '-' or absent reads stdin
        #[arg(long, env = "CEI_INPUT")]
        input: Option<String>,
    },
    /// Emit an extremal construction as graph6
    Construct {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Enumerate a graph class, one canonical graph6 line per member
    Enumerate {
        #[arg(long = "class", value_enum)]
        class: ClassFlag,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// The fixed diameter, independence number, or minimum degree
        #[arg(long)]
        value: usize,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Verify an extremal claim by exhaustive search
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Selector {
    Cei,
    Eci,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassFlag {
    /// fixed diameter
    Diam,
    /// fixed independence number
    Alpha,
    /// fixed minimum degree
    Delta,
}

impl From<ClassFlag> for ClassKind {
    fn from(f: ClassFlag) -> ClassKind {
        match f {
            ClassFlag::Diam => ClassKind::Diameter,
            ClassFlag::Alpha => ClassKind::Independence,
            ClassFlag::Delta => ClassKind::MinDegree,
        }
    }
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Even-diameter maximizer G(n,k,d)
    GNkd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// One odd-diameter family member with a fixed split s
    HNkd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
    },
    /// All odd-diameter family members, one line per split
    HFamily {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Fixed independence-number maximizer
    SAlpha {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: usize,
    },
    /// Fixed minimum-degree maximizer
    MDelta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Fixed connectivity and diameter
    T1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        run: RunFlags,
        /// Optional external graph6 stream as the enumeration source
        #[arg(long, env = "CEI_INPUT")]
        input: Option<String>,
    },
    /// Fixed connectivity and independence number
    T2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: usize,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, env = "CEI_INPUT")]
        input: Option<String>,
    },
    /// Fixed connectivity and minimum degree
    T3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, env = "CEI_INPUT")]
        input: Option<String>,
    },
    /// Edge-addition monotonicity sweep over all connected graphs
    Lemma1 {
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Args, Clone, Copy)]
struct RunFlags {
    /// Enumeration order cap
    #[arg(long, env = "CEI_CAP", default_value_t = search::DEFAULT_ENUM_CAP)]
    cap: usize,
    /// Worker threads; 0 = available parallelism
    #[arg(long, env = "CEI_WORKERS", default_value_t = 0)]
    workers: usize,
}

impl From<RunFlags> for SearchConfig {
    fn from(f: RunFlags) -> SearchConfig {
        SearchConfig { cap: f.cap, workers: f.workers }
    }
}

#[derive(Serialize)]
struct ReportDocument<T: Serialize> {
    command: String,
    parameters: serde_json::Value,
    result: T,
    version: &'static str,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct ComputeRecord {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cei: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cei_decimal: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eci: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    independence_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl ComputeRecord {
    fn blank(line: &str) -> Self {
        ComputeRecord {
            graph6: line.to_string(),
            n: None,
            edges: None,
            cei: None,
            cei_decimal: None,
            eci: None,
            min_degree: None,
            max_degree: None,
            radius: None,
            diameter: None,
            connectivity: None,
            independence_number: None,
            error: None,
        }
    }
}

fn rational_decimal(r: &Rational) -> f64 {
    let num = r.numer().to_f64().unwrap_or(f64::NAN);
    let den = r.denom().to_f64().unwrap_or(f64::NAN);
    num / den
}

fn read_lines(input: Option<&str>) -> std::io::Result<Vec<String>> {
    let text = match input {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin().lock(), &mut buf)?;
            buf
        }
        Some(path) => std::fs::read_to_string(path)?,
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn read_graphs(input: Option<&str>) -> Result<Vec<Graph>, String> {
    let lines = read_lines(input).map_err(|e| e.to_string())?;
    lines
        .iter()
        .map(|l| graph6::decode(l).map_err(|e| format!("{l}: {e}")))
        .collect()
}

fn cmd_compute(index: Selector, input: Option<&str>) -> ExitCode {
    let lines = match read_lines(input) {
        Ok(lines) => lines,
        Err(e) => {
            eprintln!("cei: {e}");
            return ExitCode::FAILURE;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut failed = false;
    for line in &lines {
        let mut rec = ComputeRecord::blank(line);
        match compute_one(line, index, &mut rec) {
            Ok(()) => {}
            Err(e) => {
                rec.error = Some(e);
                failed = true;
            }
        }
        writeln!(out, "{}", serde_json::to_string(&rec).unwrap()).unwrap();
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn compute_one(line: &str, index: Selector, rec: &mut ComputeRecord) -> Result<(), String> {
    let g = graph6::decode(line).map_err(|e| e.to_string())?;
    rec.n = Some(g.n());
    rec.edges = Some(g.edge_count());
    match index {
        Selector::Cei => {
            let v = invariants::cei(&g).map_err(|e| e.to_string())?;
            rec.cei_decimal = Some(rational_decimal(&v));
            rec.cei = Some(v.to_string());
        }
        Selector::Eci => {
            rec.eci = Some(invariants::eci(&g).map_err(|e| e.to_string())?);
        }
        Selector::All => {
            let s = invariants::summarize(&g).map_err(|e| e.to_string())?;
            rec.cei_decimal = Some(rational_decimal(&s.cei));
            rec.cei = Some(s.cei.to_string());
            rec.eci = Some(s.eci);
            rec.min_degree = Some(s.min_degree);
            rec.max_degree = Some(s.max_degree);
            rec.radius = Some(s.radius);
            rec.diameter = Some(s.diameter);
            rec.connectivity = Some(s.connectivity);
            rec.independence_number = Some(s.independence_number);
        }
    }
    Ok(())
}

fn cmd_construct(family: &FamilyCmd) -> ExitCode {
    let graphs = match family {
        FamilyCmd::GNkd { n, k, d } => constructions::build_g_nkd(*n, *k, *d).map(|g| vec![g]),
        FamilyCmd::HNkd { n, k, d, s } => {
            constructions::build_h_nkd(*n, *k, *d, *s).map(|g| vec![g])
        }
        FamilyCmd::HFamily { n, k, d } => constructions::enumerate_h_family(*n, *k, *d),
        FamilyCmd::SAlpha { n, k, alpha } => {
            constructions::build_s_nalpha(*n, *k, *alpha).map(|g| vec![g])
        }
        FamilyCmd::MDelta { n, k, delta } => {
            constructions::build_m_ndelta(*n, *k, *delta).map(|g| vec![g])
        }
    };
    match graphs {
        Ok(graphs) => {
            for g in graphs {
                println!("{}", graph6::encode(&g));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cei: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_enumerate(class: ClassFlag, n: usize, k: usize, value: usize, run: RunFlags) -> ExitCode {
    let spec = ClassSpec { kind: class.into(), n, k, value };
    match search::enumerate_class(&spec, &run.into(), None) {
        Ok(members) => {
            for g in &members {
                println!("{}", canonical_form(g).map_or_else(|_| graph6::encode(g), |l| l.into_string()));
            }
            eprintln!("count: {}", members.len());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cei: {e}");
            ExitCode::FAILURE
        }
    }
}

fn emit_report<T: Serialize>(command: &str, parameters: serde_json::Value, result: T, start: Instant) {
    let doc = ReportDocument {
        command: command.to_string(),
        parameters,
        result,
        version: env!("CARGO_PKG_VERSION"),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    println!("{}", serde_json::to_string(&doc).unwrap());
}

fn verdict_exit(verdict: Verdict) -> ExitCode {
    match verdict {
        Verdict::Confirmed => ExitCode::SUCCESS,
        Verdict::Refuted => ExitCode::from(EXIT_REFUTED),
        Verdict::EmptyClass => ExitCode::from(EXIT_EMPTY),
    }
}

fn cmd_verify(target: &VerifyCmd) -> ExitCode {
    let start = Instant::now();
    match target {
        VerifyCmd::T1 { n, k, d, run, input } => {
            let external = match input.as_deref().map(|i| read_graphs(Some(i))).transpose() {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("cei: {e}");
                    return ExitCode::FAILURE;
                }
            };
            match search::verify_theorem1(*n, *k, *d, &(*run).into(), external.as_deref()) {
                Ok(report) => {
                    let verdict = report.verdict;
                    emit_report(
                        "verify t1",
                        serde_json::json!({"n": n, "k": k, "d": d, "cap": run.cap, "workers": run.workers}),
                        report,
                        start,
                    );
                    verdict_exit(verdict)
                }
                Err(e) => {
                    eprintln!("cei: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        VerifyCmd::T2 { n, k, alpha, run, input } => {
            let external = match input.as_deref().map(|i| read_graphs(Some(i))).transpose() {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("cei: {e}");
                    return ExitCode::FAILURE;
                }
            };
            match search::verify_theorem2(*n, *k, *alpha, &(*run).into(), external.as_deref()) {
                Ok(report) => {
                    let verdict = report.verdict;
                    emit_report(
                        "verify t2",
                        serde_json::json!({"n": n, "k": k, "alpha": alpha, "cap": run.cap, "workers": run.workers}),
                        report,
                        start,
                    );
                    verdict_exit(verdict)
                }
                Err(e) => {
                    eprintln!("cei: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        VerifyCmd::T3 { n, k, delta, run, input } => {
            let external = match input.as_deref().map(|i| read_graphs(Some(i))).transpose() {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("cei: {e}");
                    return ExitCode::FAILURE;
                }
            };
            match search::verify_theorem3(*n, *k, *delta, &(*run).into(), external.as_deref()) {
                Ok(report) => {
                    let verdict = report.verdict;
                    emit_report(
                        "verify t3",
                        serde_json::json!({"n": n, "k": k, "delta": delta, "cap": run.cap, "workers": run.workers}),
                        report,
                        start,
                    );
                    verdict_exit(verdict)
                }
                Err(e) => {
                    eprintln!("cei: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        VerifyCmd::Lemma1 { max_n, run } => match search::check_lemma1(*max_n, &(*run).into()) {
            Ok(report) => {
                let ok = report.violations.is_empty();
                emit_report(
                    "verify lemma1",
                    serde_json::json!({"max_n": max_n, "cap": run.cap, "workers": run.workers}),
                    report,
                    start,
                );
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_REFUTED)
                }
            }
            Err(e) => {
                eprintln!("cei: {e}");
                ExitCode::FAILURE
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Compute { index, input } => cmd_compute(*index, input.as_deref()),
        Command::Construct { family } => cmd_construct(family),
        Command::Enumerate { class, n, k, value, run } => {
            cmd_enumerate(*class, *n, *k, *value, *run)
        }
        Command::Verify { target } => cmd_verify(target),
    }
}
