mod commands;
mod range;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use queens_core::SearchLimits;

use crate::range::NRange;

#[derive(Parser, Debug)]
#[command(name = "queens", version, about = "Explore the n-Queens graph Q(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, size and degree summary, optionally with the edge list.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Include the edge list in JSON output (CSV output always lists edges).
        #[arg(long)]
        edges: bool,
    },
    /// Dense spectrum with eigenvalue clusters and exact certificates.
    Spectrum {
        #[command(flatten)]
        common: Common,
    },
    /// Check every formula and theorem the library can certify.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest board for the characteristic-polynomial divisibility chain.
        #[arg(long, default_value_t = 8)]
        chain_max_n: usize,
    },
    /// Domination numbers, exact when the search finishes within its caps.
    Domination {
        #[command(flatten)]
        common: Common,
    },
    /// Integer eigenvalues against the conjectured pattern.
    Conjecture {
        #[command(flatten)]
        common: Common,
        /// Boards with at most this many squares use the exact characteristic polynomial.
        #[arg(long, default_value_t = 64)]
        exact_cap: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Board size or inclusive range, e.g. `8` or `3..10`.
    #[arg(long = "n", visible_alias = "n-range", value_name = "N|A..B")]
    pub n: NRange,
    /// Eigenvalue clustering tolerance.
    #[arg(long, default_value_t = queens_core::spectra::DEFAULT_TOL)]
    pub tol: f64,
    /// Wall-clock cap per search, in milliseconds.
    #[arg(long)]
    pub time_cap_ms: Option<u64>,
    /// Node cap per search.
    #[arg(long, visible_alias = "cap")]
    pub node_cap: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for independent board sizes.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl Common {
    pub fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_cap: self.node_cap,
            time_cap: self.time_cap_ms.map(Duration::from_millis),
        }
    }
}

/// Rendered report plus the assertions that failed while producing it.
pub struct Report {
    pub body: String,
    pub failures: Vec<String>,
}

/// Dense eigensolver cap, overridable with `QS_MAX_N`.
pub fn dense_cap() -> Result<usize, String> {
    match std::env::var("QS_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("QS_MAX_N must be a positive integer, got `{v}`")),
        Err(_) => Ok(queens_core::spectra::DEFAULT_DENSE_MAX_N),
    }
}

fn run(cli: Cli) -> Result<(Report, Common), String> {
    let common = match &cli.command {
        Command::Graph { common, .. }
        | Command::Spectrum { common }
        | Command::Verify { common, .. }
        | Command::Domination { common }
        | Command::Conjecture { common, .. } => common.clone(),
    };
    if !(common.tol > 0.0) {
        return Err(format!("--tol must be positive, got {}", common.tol));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err("--jobs must be at least 1".into());
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| e.to_string())?;
    let report = pool.install(|| match &cli.command {
        Command::Graph { common, edges } => commands::graph(common, *edges),
        Command::Spectrum { common } => commands::spectrum(common),
        Command::Verify { common, chain_max_n } => commands::verify(common, *chain_max_n),
        Command::Domination { common } => commands::domination(common),
        Command::Conjecture { common, exact_cap } => commands::conjecture(common, *exact_cap),
    })?;
    Ok((report, common))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, common) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &common.out {
        Some(path) => std::fs::write(path, &report.body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(report.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            eprintln!("FAIL {f}");
        }
        eprintln!("{} assertion(s) failed", report.failures.len());
        ExitCode::from(1)
    }
}
