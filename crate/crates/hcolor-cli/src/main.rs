//! Batch driver: instance checks, verification campaigns, and tightness
//! searches.
//!
//! Exit codes: 0 clean; 1 a hypothesis-satisfying instance failed its
//! conclusion (the falsifying instance is preserved); 2 usage or input
//! error; 3 search exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hcolor::factory::{
    check_spec, figure1_spec, figure2_spec, search_tightness, SearchOutcome, SearchSpec,
};
use hcolor::theorems::Statement;

use hcolor_cli::campaign::{run_campaign, CampaignConfig};
use hcolor_cli::format::{InstanceFile, SpecFile};
use hcolor_cli::report::{build_check_report, SearchReportDoc};
use hcolor_cli::{FIGURE1_LABELS, FIGURE2_LABELS};

#[derive(Parser)]
#[command(name = "hcolor", version, about = "Colored complete graphs with restricted transitions: check instances, verify the short-cycle statements, search for tightness instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    #[value(name = "T3cycle", alias = "t3cycle")]
    T3cycle,
    #[value(name = "T4small", alias = "t4small")]
    T4small,
    #[value(name = "T4large", alias = "t4large")]
    T4large,
    #[value(name = "Cor4", alias = "cor4")]
    Cor4,
}

impl WhichArg {
    fn statement(self) -> Statement {
        match self {
            WhichArg::T3cycle => Statement::T3cycle,
            WhichArg::T4small => Statement::T4small,
            WhichArg::T4large => Statement::T4large,
            WhichArg::Cor4 => Statement::Cor4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pc,
    General,
}

impl ModeArg {
    fn mode(self) -> hcolor::factory::SampleMode {
        match self {
            ModeArg::Pc => hcolor::factory::SampleMode::ProperlyColored,
            ModeArg::General => hcolor::factory::SampleMode::GeneralPattern,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate an instance file and report partitions, hypotheses, and
    /// short-cycle presence per vertex.
    Check {
        /// Instance file to analyze.
        file: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample hypothesis-satisfying instances and verify a statement's
    /// conclusion on each.
    Verify {
        #[arg(long, value_enum)]
        which: WhichArg,
        /// Order of the sampled complete graphs.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// pc: enforced color-degree colorings; general: rejection over
        /// random patterns.
        #[arg(long, value_enum, default_value_t = ModeArg::Pc)]
        mode: ModeArg,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
        /// Attempt budget per sample (general mode mostly).
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the first falsifying instance, should one appear.
        #[arg(long, default_value = "falsifier.json")]
        falsifier_out: PathBuf,
    },
    /// Search for an instance satisfying a constraint spec.
    Search {
        /// Built-in tightness target (1 or 2).
        #[arg(long, conflicts_with = "spec")]
        figure: Option<u8>,
        /// Spec file with a top-level "spec" key.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Palette size override.
        #[arg(long)]
        colors: Option<usize>,
        /// Node budget override.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write the found instance.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the search report here instead of stdout.
        #[arg(long)]
        report_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, out } => cmd_check(&file, out.as_deref()),
        Command::Verify { which, n, samples, seed, mode, threads, budget, out, falsifier_out } => {
            cmd_verify(
                which.statement(),
                n,
                samples,
                seed,
                mode.mode(),
                threads,
                budget,
                out.as_deref(),
                &falsifier_out,
            )
        }
        Command::Search { figure, spec, colors, budget, seed, out, report_out } => {
            cmd_search(figure, spec.as_deref(), colors, budget, seed, out.as_deref(), report_out.as_deref())
        }
    }
}

fn fail_usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), ExitCode> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| fail_usage(format_args!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_check(file: &Path, out: Option<&Path>) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail_usage(format_args!("cannot read {}: {e}", file.display())),
    };
    let parsed = match InstanceFile::parse(&text) {
        Ok(p) => p,
        Err(e) => return fail_usage(e),
    };
    let inst = match parsed.to_instance() {
        Ok(i) => i,
        Err(e) => return fail_usage(e),
    };
    let report = build_check_report(&file.display().to_string(), &parsed, &inst);
    let clean = report.clean();
    let json = hcolor_cli::format::pretty_json(&report);
    if emit(&json, out).is_err() {
        return ExitCode::from(2);
    }
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    which: Statement,
    n: usize,
    samples: usize,
    seed: u64,
    mode: hcolor::factory::SampleMode,
    threads: Option<usize>,
    budget: u64,
    out: Option<&Path>,
    falsifier_out: &Path,
) -> ExitCode {
    let threads = threads.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    });
    let cfg = CampaignConfig { which, n, samples, seed, mode, threads, budget };
    let report = match run_campaign(&cfg) {
        Ok(r) => r,
        Err(e) => return fail_usage(e),
    };
    let violations = report.aggregate.violations;
    if let Some(falsifier) = report.falsifiers.first() {
        if let Err(e) = std::fs::write(falsifier_out, falsifier.to_json()) {
            return fail_usage(format_args!("cannot write falsifier: {e}"));
        }
        eprintln!("falsifying instance written to {}", falsifier_out.display());
    }
    let json = hcolor_cli::format::pretty_json(&report);
    if emit(&json, out).is_err() {
        return ExitCode::from(2);
    }
    if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_search(
    figure: Option<u8>,
    spec_path: Option<&Path>,
    colors: Option<usize>,
    budget: Option<u64>,
    seed: Option<u64>,
    out: Option<&Path>,
    report_out: Option<&Path>,
) -> ExitCode {
    let (mut spec, labels, default_out): (SearchSpec, Option<Vec<String>>, PathBuf) =
        match (figure, spec_path) {
            (Some(1), None) => (
                figure1_spec(),
                Some(FIGURE1_LABELS.iter().map(|s| s.to_string()).collect()),
                PathBuf::from("figure1.json"),
            ),
            (Some(2), None) => (
                figure2_spec(),
                Some(FIGURE2_LABELS.iter().map(|s| s.to_string()).collect()),
                PathBuf::from("figure2.json"),
            ),
            (Some(k), None) => return fail_usage(format_args!("no built-in figure {k}")),
            (None, Some(path)) => {
                let text = match std::fs::read_to_string(path) {
                    Ok(t) => t,
                    Err(e) => {
                        return fail_usage(format_args!("cannot read {}: {e}", path.display()))
                    }
                };
                match SpecFile::parse(&text) {
                    Ok(f) => (f.to_spec(), None, PathBuf::from("found_instance.json")),
                    Err(e) => return fail_usage(e),
                }
            }
            _ => return fail_usage("exactly one of --figure and --spec is required"),
        };
    if let Some(c) = colors {
        spec.colors = Some(c);
    }
    if let Some(b) = budget {
        spec.budget = b;
    }
    if let Some(s) = seed {
        spec.seed = s;
    }

    let outcome = match search_tightness(&spec) {
        Ok(o) => o,
        Err(e) => return fail_usage(e),
    };
    match outcome {
        SearchOutcome::Exhausted { stats } => {
            let report = SearchReportDoc {
                found: false,
                nodes: stats.nodes,
                budget: spec.budget,
                budget_exhausted: stats.budget_exhausted,
                deepest_conflict: stats.deepest_conflict,
                out: None,
                spec_check_failures: vec![],
                check: None,
            };
            let json = hcolor_cli::format::pretty_json(&report);
            if emit(&json, report_out).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(3)
        }
        SearchOutcome::Found { instance, stats } => {
            let out_path = out.map(Path::to_path_buf).unwrap_or(default_out);
            let file = InstanceFile::from_instance(&instance, labels);
            if let Err(e) = std::fs::write(&out_path, file.to_json()) {
                return fail_usage(format_args!("cannot write {}: {e}", out_path.display()));
            }

            // re-verification: the written file goes back through the
            // check pipeline, and the spec through the analysis modules
            let spec_check_failures = check_spec(&instance, &spec);
            let reread = std::fs::read_to_string(&out_path)
                .ok()
                .and_then(|t| InstanceFile::parse(&t).ok());
            let check = reread.and_then(|f| {
                let inst = f.to_instance().ok()?;
                Some(build_check_report(&out_path.display().to_string(), &f, &inst))
            });
            let verified = spec_check_failures.is_empty()
                && check.as_ref().is_some_and(|c| c.clean());

            let report = SearchReportDoc {
                found: true,
                nodes: stats.nodes,
                budget: spec.budget,
                budget_exhausted: stats.budget_exhausted,
                deepest_conflict: stats.deepest_conflict,
                out: Some(out_path.display().to_string()),
                spec_check_failures,
                check,
            };
            let json = hcolor_cli::format::pretty_json(&report);
            if emit(&json, report_out).is_err() {
                return ExitCode::from(2);
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: found instance failed re-verification");
                ExitCode::from(1)
            }
        }
    }
}
