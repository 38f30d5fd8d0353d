use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use semichain::construction::Mode;
use semichain::enumerate::Sequence;
use semichain::report::{self, Report, EXIT_USAGE};
use semichain::{KaryOpTable, OpTable, Result, SemilatticeOrder};

/// Semilattice operations on finite chains.
#[derive(Parser)]
#[command(name = "semichain", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Property panel and fast associativity test for a table; exits 0 iff associative.
    Check {
        /// Table file (text or JSON), `-` for stdin.
        file: PathBuf,
    },
    /// Sequence values.
    Count(CountArgs),
    /// Every semilattice order nondecreasing for 1 < ... < n, one per line.
    Gen {
        #[arg(long)]
        n: usize,
    },
    /// Total orders compatible with a binary-tree semilattice order.
    Orders {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "nondecreasing")]
        mode: Mode,
        #[arg(long)]
        count_only: bool,
    },
    /// Contour plot of a table, or with --dot the Hasse diagram of its order.
    Plot {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Hasse diagram of a semilattice order.
    Hasse {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Binary operation behind a k-ary table.
    Reduce {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("what").required(true).args(["seq", "table", "internal"])))]
struct CountArgs {
    /// alpha, tau, beta or delta; needs --n.
    #[arg(long, requires = "n")]
    seq: Option<Sequence>,
    /// All four sequences for 0..=UPTO.
    #[arg(long, requires = "upto")]
    table: bool,
    /// Brute-force count of orders internal for the chain; needs --n.
    #[arg(long, requires = "n")]
    internal: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    upto: Option<usize>,
}

fn read_input(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn run(command: Command) -> Result<Report> {
    let load = |path: &Path| {
        read_input(path).map_err(|e| semichain::Error::Io(format!("{}: {e}", path.display())))
    };
    match command {
        Command::Check { file } => Ok(report::check(&load(&file)?.parse::<OpTable>()?)),
        Command::Count(args) => match (args.seq, args.table, args.internal) {
            (Some(seq), ..) => Ok(report::count_sequence(seq, args.n.unwrap_or(0))),
            (None, true, _) => Ok(report::count_table(args.upto.unwrap_or(0))),
            _ => report::count_internal(args.n.unwrap_or(0)),
        },
        Command::Gen { n } => report::gen(n),
        Command::Orders {
            file,
            mode,
            count_only,
        } => report::orders(&load(&file)?.parse::<SemilatticeOrder>()?, mode, count_only),
        Command::Plot { file, dot } => report::plot(&load(&file)?.parse::<OpTable>()?, dot),
        Command::Hasse { file, dot } => {
            report::hasse(&load(&file)?.parse::<SemilatticeOrder>()?, dot)
        }
        Command::Reduce { file } => report::reduce_report(&load(&file)?.parse::<KaryOpTable>()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("semichain: {e}");
            let report = report::error_report(&e);
            if !cli.json {
                return ExitCode::from(report.exit);
            }
            report
        }
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(report.render(cli.json).as_bytes()).is_err() {
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(report.exit)
}
