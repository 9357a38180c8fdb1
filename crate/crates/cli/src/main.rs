use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nullcert_cli::bench::{self, BenchConfig, Family};
use nullcert_cli::commands::{self, MembershipOptions};
use nullcert_cli::instance::{parse_cap, Instance};
use nullcert_cli::{CliError, Settings};
use nullcert_core::groebner::Budget;

#[derive(Parser)]
#[command(name = "nullcert", version, about = "Degree-bounded ideal membership certificates and their bounds")]
struct Cli {
    /// Maximum number of critical pairs per Gröbner basis computation.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget_pairs: usize,
    /// Maximum number of nonzero entries in a certificate linear system.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget_matrix: usize,
    /// Seed for sampled instances.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Instance file.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Search for cofactors with Σ F^I Q_I = Φ on V and deg F^I Q_I ≤ ρ.
    Membership {
        #[command(flatten)]
        file: FileArg,
        /// Search at this degree bound only.
        #[arg(long)]
        rho: Option<u32>,
        /// Find the minimal degree by scanning ρ upwards.
        #[arg(long)]
        min: bool,
        /// Scan limit for --min.
        #[arg(long)]
        rho_max: Option<u32>,
        /// Cap deg Q_j at k, as j:k with 1-based j (repeatable).
        #[arg(long = "cap-gen", value_parser = parse_cap)]
        cap_gen: Vec<(usize, u32)>,
        /// Also print the homogenized identity.
        #[arg(long)]
        lift: bool,
    },
    /// Evaluate the degree bounds for an instance.
    Bounds {
        #[command(flatten)]
        file: FileArg,
        /// Compute n, deg X and reg X from the variety.
        #[arg(long)]
        compute_invariants: bool,
        /// Print name,value,applicability,hash lines.
        #[arg(long)]
        machine: bool,
    },
    /// Minimal graded free resolution, Betti table and regularity.
    Resolve {
        #[command(flatten)]
        file: FileArg,
        /// Treat the ideal as affine: homogenize and saturate by z0.
        #[arg(long)]
        homogenize_saturate: bool,
    },
    /// Hilbert series, dimension and degree.
    Invariants {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        homogenize_saturate: bool,
        /// Work over GF(p) instead of ℚ.
        #[arg(long = "char")]
        characteristic: Option<u32>,
    },
    /// Run a benchmark family and write CSV.
    Bench {
        /// kollar, macaulay-generic or cusp.
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Generator degrees, as a, a..b or a,b,c.
        #[arg(long, default_value = "2")]
        d: String,
        #[arg(long, default_value = "2")]
        m: String,
        #[arg(long, default_value = "2")]
        n: String,
        #[arg(long, default_value = "3,5,7")]
        p: String,
        /// Instances per parameter point (macaulay-generic).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Scan limit where no theorem bound applies.
        #[arg(long, default_value_t = 20)]
        rho_max: u32,
        /// Write ms = 0 so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// Output file (default stdout).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}` (kollar, macaulay-generic, cusp)"))
}

fn load(path: &PathBuf) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Instance::parse(&text)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let settings = Settings {
        budget: Budget { max_pairs: cli.budget_pairs, ..Budget::default() },
        matrix_entries: cli.budget_matrix,
        seed: cli.seed,
    };
    match cli.command {
        Command::Membership { file, rho, min, rho_max, cap_gen, lift } => {
            let opts = MembershipOptions { rho, min: min || rho.is_none(), rho_max, caps: cap_gen, lift };
            commands::membership(&load(&file.file)?, &opts, &settings, out)
        }
        Command::Bounds { file, compute_invariants, machine } => {
            commands::bounds(&load(&file.file)?, compute_invariants, machine, &settings, out)
        }
        Command::Resolve { file, homogenize_saturate } => {
            commands::resolve(&load(&file.file)?, homogenize_saturate, &settings, out)
        }
        Command::Invariants { file, homogenize_saturate, characteristic } => {
            commands::invariants(&load(&file.file)?, homogenize_saturate, characteristic, &settings, out)
        }
        Command::Bench { family, d, m, n, p, count, rho_max, no_timing, csv } => {
            let range = |s: &str| bench::parse_range(s).map_err(CliError::Parse);
            let config = BenchConfig {
                family,
                d: range(&d)?,
                m: range(&m)?,
                n: range(&n)?,
                p: range(&p)?,
                count,
                rho_max,
                timing: !no_timing,
            };
            let rows = bench::run(&config, &settings)?;
            match csv {
                Some(path) => {
                    let mut f = fs::File::create(&path)?;
                    bench::write_csv(&rows, &mut f)?;
                }
                None => bench::write_csv(&rows, out)?,
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("nullcert: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
