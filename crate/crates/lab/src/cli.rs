//! Command-line front end. Exit codes: 0 success, 1 a checked identity
//! failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use qschur::omega::{ribbon_q, skew_q};
use qschur::{Composition, SkewShape};

use crate::classes::conjecture_check;
use crate::config::{Format, RunConfig};
use crate::report::{build_report, export_report};
use crate::suites::{run_suite, Suite};
use crate::witness::{inequality_witness, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qlab", version, about = "Equality laboratory for ribbon Schur Q-functions")]
struct Cli {
    /// key = value configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the q-expansion of a ribbon or skew shape
    Expand {
        #[arg(long, value_parser = parse_composition, conflicts_with = "shape", required_unless_present = "shape")]
        ribbon: Option<Composition>,
        /// skew shape as λ/μ, e.g. 3,2/1
        #[arg(long, value_parser = parse_shape)]
        shape: Option<SkewShape>,
    },
    /// Decide whether two ribbons have equal ribbon functions
    Eq {
        #[arg(long, value_parser = parse_composition)]
        a: Composition,
        #[arg(long, value_parser = parse_composition)]
        b: Composition,
        /// largest variable count tried for ribbons too big to expand
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Equality classes of all ribbons with n cells
    Classes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run identity suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max: Option<u32>,
    },
    /// Compare move-closure classes with equality classes for every size up to n
    Conjecture {
        #[arg(long)]
        n: Option<u32>,
        /// report for the largest size
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

/// Run the CLI on `args` (program name first), writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut config = match &cli.config {
        Some(path) => match RunConfig::from_file(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        None => RunConfig::default(),
    };
    if cli.jobs.is_some() {
        config.worker_count = cli.jobs;
    }
    if let Some(jobs) = config.worker_count {
        // the global pool can be configured once per process; later calls
        // keep the first setting
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match execute(cli.command, config, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, mut config: RunConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    match command {
        Command::Expand { ribbon, shape } => {
            let e = match (ribbon, shape) {
                (Some(r), _) => ribbon_q(&r),
                (None, Some(s)) => skew_q(&s),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            writeln!(out, "{e}")?;
            Ok(EXIT_OK)
        }
        Command::Eq { a, b, k_max } => {
            if a.size() != b.size() {
                writeln!(out, "not equal (sizes {} and {})", a.size(), b.size())?;
                return Ok(EXIT_OK);
            }
            let w = inequality_witness(&a, &b, k_max.unwrap_or(config.variable_count));
            match w {
                Witness::Equal => writeln!(out, "equal")?,
                Witness::DiffersInExpansion => writeln!(out, "not equal")?,
                other => writeln!(out, "{other}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Classes { n, out: path, format } => {
            if n == 0 {
                eprintln!("error: n must be at least 1");
                return Ok(EXIT_USAGE);
            }
            apply_output(&mut config, path, format);
            let report = build_report(n);
            for class in &report.classes {
                let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
                writeln!(out, "{}: {{{}}} = {}", class.class_id, members.join(" | "), class.expansion)?;
            }
            writeln!(out, "{} classes", report.classes.len())?;
            for note in &report.notes {
                writeln!(out, "note: {note}")?;
            }
            export_report(&report, &config)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max } => {
            let max = max.unwrap_or(config.max_n.min(8));
            let results = run_suite(suite, max);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            Ok(if results.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Conjecture { n, out: path, format } => {
            let n = n.unwrap_or(config.max_n);
            if n == 0 {
                eprintln!("error: n must be at least 1");
                return Ok(EXIT_USAGE);
            }
            apply_output(&mut config, path, format);
            let mut all_match = true;
            for m in 1..n {
                let (classes, closure, v) = conjecture_check(m);
                all_match &= v.matches();
                writeln!(
                    out,
                    "n={m}: {} classes, {} closure classes, {}",
                    classes.len(),
                    closure.components.len(),
                    verdict_word(&v)
                )?;
            }
            let report = build_report(n);
            all_match &= report.verdict.matches();
            writeln!(
                out,
                "n={n}: {} classes, {} closure classes, {}",
                report.classes.len(),
                report.closure_classes.len(),
                verdict_word(&report.verdict)
            )?;
            for note in &report.notes {
                writeln!(out, "note: {note}")?;
            }
            export_report(&report, &config)?;
            Ok(if all_match { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn apply_output(config: &mut RunConfig, path: Option<PathBuf>, format: Option<Format>) {
    if let Some(p) = path {
        if format.is_none() && p.extension().is_some_and(|e| e == "csv") {
            config.format = Format::Csv;
        }
        config.output_path = Some(p);
    }
    if let Some(f) = format {
        config.format = f;
    }
}

fn verdict_word(v: &crate::classes::Verdict) -> String {
    if v.matches() {
        "match".to_string()
    } else {
        format!(
            "MISMATCH ({} equal-but-not-connected, {} connected-but-not-equal)",
            v.equal_not_connected.len(),
            v.connected_not_equal.len()
        )
    }
}
