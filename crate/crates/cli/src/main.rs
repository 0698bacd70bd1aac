//! `tcluster`: command-line front end for the terminal-cluster engine.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid
//! input.

mod check;
mod commands;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::commands::{Format, MinorsMode, Report};
use crate::error::{CliError, CliResult};
use crate::input::{load_category, load_ordering, load_seed, write, OrderingArg, Target};

/// Largest output printed to stdout; bigger reports need `--out`.
const STDOUT_LIMIT: usize = 64 * 1024;

#[derive(Debug, Parser)]
#[command(name = "tcluster", version, about = "Cluster mutation calculi for terminal modules")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the full output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run the built-in worked examples and emit a verification manifest.
    #[arg(long)]
    check: bool,
    /// Where to write the verification manifest (default: stdout).
    #[arg(long, requires = "check")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

/// A quiver file, a level vector and an adapted ordering.
#[derive(Debug, Args)]
struct CategoryArgs {
    /// Quiver file: {"n": 3, "arrows": [[1, 2], [1, 2], [2, 3]]}.
    quiver: PathBuf,
    /// Level vector t, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    t: Vec<usize>,
    /// `canonical` or `file:PATH` with a JSON list of [i, a] vertices.
    #[arg(long, default_value = "canonical")]
    ordering: OrderingArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Knit the category: vertices, dimension vectors, Γ_M*, hom table, d_Δ.
    Build(CategoryArgs),
    /// Mutate a seed along a sequence of positions or labels.
    Mutate {
        /// Seed file: an exchange matrix {"b": [[…]], "frozen": [..]} or a
        /// seed saved with --save-seed.
        #[arg(long, conflicts_with_all = ["quiver", "t"], required_unless_present = "quiver")]
        seed: Option<PathBuf>,
        /// Start from the initial seed of this quiver instead.
        #[arg(long, requires = "t")]
        quiver: Option<PathBuf>,
        /// Level vector for --quiver, comma separated.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<usize>>,
        /// Ordering for --quiver.
        #[arg(long, default_value = "canonical")]
        ordering: OrderingArg,
        /// Save the final seed as JSON.
        #[arg(long)]
        save_seed: Option<PathBuf>,
        /// Targets: 1-based positions or labels such as `1[1,2]`.
        #[arg(required = true)]
        targets: Vec<Target>,
    },
    /// Run the mutation schedule from T_M to its dual and check each identity.
    Path {
        #[command(flatten)]
        category: CategoryArgs,
        /// Skip cluster variables; report the combinatorial run only.
        #[arg(long)]
        no_expand: bool,
    },
    /// Generating function g_{T_k} of Euler characteristics of flag varieties.
    Euler {
        #[command(flatten)]
        category: CategoryArgs,
        /// Summand index 1..=r in the chosen ordering.
        #[arg(long)]
        k: usize,
    },
    /// Type-A minor identifications for the linear quiver on n vertices.
    Minors {
        /// Number of quiver vertices.
        #[arg(long)]
        n: usize,
        /// Which identification to verify.
        #[arg(long, value_enum, default_value_t = MinorsMode::All)]
        mode: MinorsMode,
        /// Compare interval minors against this golden table.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn run_command(command: Command, format: Format) -> CliResult<Report> {
    match command {
        Command::Build(c) => {
            let cat = load_category(&c.quiver, &c.t)?;
            let ord = load_ordering(&cat, &c.ordering)?;
            commands::build(&cat, &ord, format)
        }
        Command::Mutate {
            seed,
            quiver,
            t,
            ordering,
            save_seed,
            targets,
        } => {
            let (seed, cat) = match (seed, quiver) {
                (Some(path), _) => (load_seed(&path)?, None),
                (None, Some(path)) => {
                    let cat = load_category(&path, &t.unwrap_or_default())?;
                    let ord = load_ordering(&cat, &ordering)?;
                    (terminal_cluster::initial_seed(&cat, &ord)?, Some(cat))
                }
                (None, None) => return Err(CliError::Input("mutate needs --seed or --quiver".into())),
            };
            let (report, last) = commands::mutate(seed, cat.as_ref(), &targets, format)?;
            if let Some(path) = save_seed {
                write(&path, &serde_json::to_string_pretty(&last).expect("seeds serialize"))?;
            }
            Ok(report)
        }
        Command::Path { category: c, no_expand } => {
            let cat = load_category(&c.quiver, &c.t)?;
            let ord = load_ordering(&cat, &c.ordering)?;
            commands::path(&cat, &ord, !no_expand, format)
        }
        Command::Euler { category: c, k } => {
            let cat = load_category(&c.quiver, &c.t)?;
            let ord = load_ordering(&cat, &c.ordering)?;
            commands::euler(&cat, &ord, k, format)
        }
        Command::Minors { n, mode, golden } => {
            let golden = match golden {
                Some(path) => Some(commands::parse_golden(
                    &std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
                )?),
                None => None,
            };
            commands::minors(n, mode, golden.as_ref(), format)
        }
    }
}

/// Prints or writes a report; large reports go to stdout only as a summary.
fn emit(report: &Report, out: Option<&PathBuf>) -> CliResult<()> {
    let mut stdout = std::io::stdout().lock();
    let text = match out {
        Some(path) => {
            write(path, &report.full)?;
            let mut s = report.summary.clone().unwrap_or_default();
            s.push_str(&format!("wrote {}\n", path.display()));
            s
        }
        None if report.full.len() > STDOUT_LIMIT => {
            let mut s = report.summary.clone().unwrap_or_default();
            s.push_str(&format!(
                "output has {} bytes; pass --out FILE to write it\n",
                report.full.len()
            ));
            s
        }
        None => report.full.clone(),
    };
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Input(format!("stdout: {e}")))
}

fn run(cli: Cli) -> CliResult<u8> {
    let mut code = 0;
    if cli.check {
        let manifest = check::run_checks();
        let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
        match &cli.manifest {
            Some(path) => write(path, &json)?,
            None => print!("{json}"),
        }
        for c in manifest.checks.iter().filter(|c| c.status == "fail") {
            eprintln!("check {} failed: expected {}, got {}", c.id, c.expected, c.actual);
        }
        if manifest.failed > 0 {
            code = 1;
        }
    }
    match cli.command {
        Some(command) => {
            let report = run_command(command, cli.format)?;
            emit(&report, cli.out.as_ref())?;
            for f in &report.failures {
                eprintln!("verification failed: {f}");
            }
            if !report.failures.is_empty() {
                code = 1;
            }
        }
        None if !cli.check => return Err(CliError::Input("no command given; see --help".into())),
        None => {}
    }
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
