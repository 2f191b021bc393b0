//! The `slice-ss` command line: `compute`, `verify` and `chart`.
//!
//! Settings come from flags, then a JSON `--config` file, then defaults.
//! Exit codes: 0 on success, 1 when a check fails or a crosscheck
//! disagrees, 2 on malformed input or a request outside the domain.

pub mod chart;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engine::{run_linalg, run_matching};
use crate::error::Error;
use crate::verify::presentation::presentation_dim;
use crate::verify::{check_einf_relations, compare_suslin, RelationReport, SuslinRow, SuslinStatus};

use self::chart::{chart_data, render_svg, render_txt, ChartFormat, Page};
use self::config::{BackendChoice, Format, PartialConfig, RunConfig, COMPUTE_DEFAULTS};
use self::output::{cross_check, to_tsv, ComputeDocument, CrossCheck};

pub const THREADS_VAR: &str = "SLICE_SS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "slice-ss", version, about = "C₂-equivariant slice spectral sequences for BP/2 and BP⟨n⟩/2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the spectral sequence on a window and write E∞.
    Compute(ComputeArgs),
    /// Check E∞ against known relations, Suslin's table, or across backends.
    Verify(VerifyArgs),
    /// Draw one weight of a page.
    Chart(ChartArgs),
}

#[derive(Debug, Default, Args)]
pub struct WindowArgs {
    /// bp2, kgl2 or bpn:<n>
    #[arg(long)]
    pub spectrum: Option<String>,
    /// Stem range <min>:<max>
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Largest filtration
    #[arg(long)]
    pub qmax: Option<i64>,
    /// Weight range <min>:<max>
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// JSON file with any of: spectrum, p, qmax, w, backend, output, format
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl WindowArgs {
    fn partial(&self) -> PartialConfig {
        PartialConfig {
            spectrum: self.spectrum.clone(),
            p: self.p.clone(),
            qmax: self.qmax,
            w: self.w.clone(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub window: WindowArgs,
    /// matching, linalg or both
    #[arg(long)]
    pub backend: Option<String>,
    /// json or tsv
    #[arg(long)]
    pub format: Option<String>,
    /// Output file; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Leave the timestamp out so repeated runs are byte-identical
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Einf,
    Suslin,
    Crosscheck,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Largest degree for the Suslin comparison
    #[arg(long, default_value_t = 23)]
    pub dmax: u32,
    /// Write the JSON report here; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    #[command(flatten)]
    pub window: WindowArgs,
    /// Page number, or einf
    #[arg(long, default_value = "einf")]
    pub page: String,
    #[arg(long, allow_hyphen_values = true)]
    pub weight: i64,
    /// svg or txt
    #[arg(long, default_value = "txt")]
    pub format: String,
    /// Output file; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn resolve(window: &WindowArgs, flags: PartialConfig) -> crate::Result<RunConfig> {
    let file = match &window.config {
        Some(path) => PartialConfig::from_file(path)?,
        None => PartialConfig::default(),
    };
    flags.over(window.partial()).over(file).resolve(&COMPUTE_DEFAULTS)
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Outcome of a subcommand that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

pub fn compute(args: &ComputeArgs) -> anyhow::Result<Status> {
    let flags = PartialConfig {
        backend: args.backend.clone(),
        format: args.format.clone(),
        output: args.out.clone(),
        ..Default::default()
    };
    let cfg = resolve(&args.window, flags)?;
    let (mut doc, status) = match cfg.backend {
        BackendChoice::Matching => (ComputeDocument::new(&run_matching(cfg.spectrum, &cfg.window), "matching"), Status::Ok),
        BackendChoice::Linalg => (ComputeDocument::new(&run_linalg(cfg.spectrum, &cfg.window)?, "linalg"), Status::Ok),
        BackendChoice::Both => {
            let m = run_matching(cfg.spectrum, &cfg.window);
            let l = run_linalg(cfg.spectrum, &cfg.window)?;
            let check = cross_check(&m, &l);
            let status = if check.disagreements.is_empty() { Status::Ok } else { Status::Failed };
            for d in &check.disagreements {
                eprintln!("disagreement at {}: matching {}, linalg {}", d.tridegree, d.matching, d.linalg);
            }
            let mut doc = ComputeDocument::new(&m, "both");
            doc.crosscheck = Some(check);
            (doc, status)
        }
    };
    if !args.deterministic {
        doc.timestamp = Some(SystemTime::now().duration_since(UNIX_EPOCH)?.as_secs());
    }
    let text = match cfg.format {
        Format::Json => to_json(&doc)?,
        Format::Tsv => to_tsv(&doc),
    };
    emit(cfg.output.as_deref(), &text)?;
    Ok(status)
}

#[derive(Debug, Default, Serialize)]
pub struct PresentationMismatch {
    pub tridegree: String,
    pub engine: usize,
    pub presentation: u64,
}

#[derive(Debug, Default, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub einf: Option<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suslin: Option<Vec<SuslinRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<CrossCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Vec<PresentationMismatch>>,
}

pub fn verify(args: &VerifyArgs) -> anyhow::Result<Status> {
    let cfg = resolve(&args.window, PartialConfig::default())?;
    let mut report = VerifyReport {
        passed: true,
        ..Default::default()
    };
    let wants = |s: Suite| args.suite == s || args.suite == Suite::All;

    if wants(Suite::Einf) {
        let res = run_matching(cfg.spectrum, &cfg.window);
        let rel = check_einf_relations(cfg.spectrum, &res);
        report.passed &= rel.passed();
        eprintln!(
            "einf: {} relations, {} pass, {} fail, {} outside the window",
            rel.checks.len(),
            rel.count(crate::verify::CheckStatus::Pass),
            rel.count(crate::verify::CheckStatus::Fail),
            rel.count(crate::verify::CheckStatus::Untested)
        );
        report.einf = Some(rel);
    }

    if wants(Suite::Suslin) {
        let d = i64::from(args.dmax);
        let win = crate::Window::new(0, d, d, 0, 0)?;
        let rows = compare_suslin(&run_matching(crate::SpectrumSpec::kgl2(), &win), args.dmax)?;
        let mismatches = rows.iter().filter(|r| r.status == SuslinStatus::Mismatch).count();
        report.passed &= mismatches == 0;
        eprintln!("suslin: degrees 0..={}, {mismatches} mismatches", args.dmax);
        report.suslin = Some(rows);
    }

    if wants(Suite::Crosscheck) {
        let m = run_matching(cfg.spectrum, &cfg.window);
        let l = run_linalg(cfg.spectrum, &cfg.window)?;
        let check = cross_check(&m, &l);
        let mut mismatches = Vec::new();
        for t in cfg.window.occupied() {
            if !m.certified(t) {
                continue;
            }
            let (engine, presentation) = (m.dim(t), presentation_dim(cfg.spectrum, t));
            if engine as u64 != presentation {
                mismatches.push(PresentationMismatch {
                    tridegree: t.key(),
                    engine,
                    presentation,
                });
            }
        }
        report.passed &= check.disagreements.is_empty() && mismatches.is_empty();
        eprintln!(
            "crosscheck: {} tridegrees, {} backend disagreements, {} presentation mismatches",
            check.compared,
            check.disagreements.len(),
            mismatches.len()
        );
        report.crosscheck = Some(check);
        report.presentation = Some(mismatches);
    }

    emit(args.out.as_deref(), &to_json(&report)?)?;
    eprintln!("{}", if report.passed { "PASS" } else { "FAIL" });
    Ok(if report.passed { Status::Ok } else { Status::Failed })
}

pub fn chart(args: &ChartArgs) -> anyhow::Result<Status> {
    let cfg = resolve(&args.window, PartialConfig::default())?;
    let page: Page = args.page.parse()?;
    let format: ChartFormat = args.format.parse()?;
    let data = chart_data(&run_matching(cfg.spectrum, &cfg.window), page, args.weight)?;
    let text = match format {
        ChartFormat::Svg => render_svg(&data),
        ChartFormat::Txt => render_txt(&data),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(Status::Ok)
}

/// Sizes the global thread pool from `SLICE_SS_THREADS`, if set.
pub fn configure_threads() -> crate::Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Usage(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Usage(e.to_string()))
}

fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::Usage(_) | Error::Domain(_) | Error::Dimension { .. }) => 2,
        _ => 1,
    }
}

/// Parses `args`, runs the subcommand and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let run = || -> anyhow::Result<Status> {
        configure_threads()?;
        match &cli.command {
            Command::Compute(a) => compute(a),
            Command::Verify(a) => verify(a),
            Command::Chart(a) => chart(a),
        }
    };
    match run() {
        Ok(Status::Ok) => 0,
        Ok(Status::Failed) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}
