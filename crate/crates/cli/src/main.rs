//! `tolrel` — analyze finite tolerance relations and their coverings.

mod dot;
mod error;
mod file;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;
use file::{Kind, RelationFile};
use report::AnalyzeOptions;

#[derive(Parser)]
#[command(
    name = "tolrel",
    version,
    about = "Blocks, coverings, Helly numbers, and rough-approximation lattices of finite tolerance relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DotKind {
    /// The tolerance as an undirected graph, loops dropped.
    Graph,
    /// The Hasse diagram of the induced quasiorder, dashed segments between
    /// mutually comparable elements.
    Hasse,
    /// The inclusion diagram of the upper-definable lattice (or of the
    /// lattice itself, for lattice files).
    Lattice,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a tolerance or covering file and print a structured report.
    Analyze {
        file: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        report: ReportFormat,
        /// Cross-check blocks, definable families, and normality against
        /// the brute-force oracles (small universes only).
        #[arg(long)]
        oracle: bool,
        /// Abort block enumeration beyond this many blocks.
        #[arg(long, value_name = "N", default_value_t = tolrel::DEFAULT_BLOCK_CAP)]
        block_cap: usize,
    },
    /// Run a verification suite; nonzero exit on any inconsistency.
    Verify {
        /// One of: examples, d1d2, characterization, helly, main, c1c2c3,
        /// distributive, blocks-oracle, definable-oracle, schreider, all.
        suite: String,
        /// Universe bound (poset size for `distributive`, maximum universe
        /// size for the oracle suites).
        #[arg(long)]
        n: Option<usize>,
        /// Sample count for the randomized oracle suites.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for the randomized oracle suites.
        #[arg(long, default_value_t = 0xB10C)]
        seed: u64,
    },
    /// Render a relation file as DOT.
    ExportDot {
        file: PathBuf,
        /// What to draw.
        #[arg(long, value_enum)]
        what: DotKind,
        /// Apply the reflexive-transitive closure to quasiorder input
        /// instead of requiring it to be transitive.
        #[arg(long)]
        closure: bool,
    },
}

fn read_relation_file(path: &Path) -> Result<RelationFile, CliError> {
    let contents = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let json = path.extension().is_some_and(|ext| ext == "json");
    RelationFile::parse(&contents, json)
}

fn run() -> Result<ExitCode, CliError> {
    match Cli::parse().command {
        Command::Analyze {
            file,
            report,
            oracle,
            block_cap,
        } => {
            let parsed = read_relation_file(&file)?;
            let analysis = report::analyze(&parsed, AnalyzeOptions { oracle, block_cap })?;
            match report {
                ReportFormat::Json => print!("{}", analysis.to_json()),
                ReportFormat::Table => print!("{}", analysis.to_table()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n,
            samples,
            seed,
        } => {
            let outcomes = tolrel::verify::run_suite(&suite, n, samples, seed)?;
            let mut all_passed = true;
            for outcome in &outcomes {
                println!("{}", outcome.summary());
                for failure in &outcome.failures {
                    println!("  - {failure}");
                }
                if outcome.truncated > 0 {
                    println!("  - ... and {} more failures", outcome.truncated);
                }
                all_passed &= outcome.passed();
            }
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::ExportDot {
            file,
            what,
            closure,
        } => {
            let parsed = read_relation_file(&file)?;
            print!("{}", export_dot(&parsed, what, closure)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn export_dot(parsed: &RelationFile, what: DotKind, closure: bool) -> Result<String, CliError> {
    let rendered = match (what, parsed.kind) {
        (DotKind::Graph, Kind::Tolerance | Kind::Covering) => {
            dot::tolerance_graph(&parsed.to_tolerance()?)
        }
        (DotKind::Graph, Kind::Quasiorder) => {
            dot::tolerance_graph(&parsed.to_quasiorder(closure)?.tolerance())
        }
        (DotKind::Graph, Kind::Lattice) => {
            dot::tolerance_graph(&parsed.to_lattice()?.bowtie_tolerance()?)
        }
        (DotKind::Hasse, Kind::Tolerance | Kind::Covering) => {
            dot::quasiorder_hasse(&parsed.to_tolerance()?.quasiorder())
        }
        (DotKind::Hasse, Kind::Quasiorder) => {
            dot::quasiorder_hasse(&parsed.to_quasiorder(closure)?)
        }
        (DotKind::Hasse, Kind::Lattice) => dot::lattice_hasse(&parsed.to_lattice()?),
        (DotKind::Lattice, Kind::Tolerance | Kind::Covering) => {
            dot::set_lattice_hasse(&tolrel::upper_definable(&parsed.to_tolerance()?))
        }
        (DotKind::Lattice, Kind::Quasiorder) => dot::set_lattice_hasse(&tolrel::upper_definable(
            &parsed.to_quasiorder(closure)?.tolerance(),
        )),
        (DotKind::Lattice, Kind::Lattice) => dot::lattice_hasse(&parsed.to_lattice()?),
    };
    Ok(rendered)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
