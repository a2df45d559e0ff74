use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vline::cli::{cmd_bound, cmd_compare, cmd_spectrum, cmd_transform};
use vline::config::{RunConfig, SchemeSelection};
use vline::spectrum::CoeffMethod;

/// V-line transform sampling driver: deterministic CSV tables for the
/// transform, its spectrum, scheme comparisons and error bounds.
#[derive(Parser)]
#[command(name = "vline", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Path to the key-value run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Evaluation grid side (overrides the config).
    #[arg(long)]
    grid: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the extended V-line data g(phi, psi) on a uniform grid.
    Transform(Common),
    /// Dump the Fourier coefficient table with spectrum-set flags.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Coefficient route (overrides the config).
        #[arg(long, value_parser = ["direct", "bessel"])]
        method: Option<String>,
    },
    /// Run the scheme comparison: budgets, sup errors and the bound.
    Compare {
        #[command(flatten)]
        common: Common,
        /// Which schemes to run (overrides the config).
        #[arg(long, value_parser = ["standard", "interlaced", "both"])]
        scheme: Option<String>,
        /// Inflate the vertex-node count by pi (conservative mode).
        #[arg(long)]
        conservative_n: bool,
    },
    /// Evaluate the error-bound breakdown alone.
    Bound(Common),
}

fn load(common: &Common) -> vline::Result<RunConfig> {
    let mut cfg = RunConfig::load(&common.config)?;
    if let Some(out) = &common.out {
        cfg.out_dir = out.clone();
    }
    if let Some(grid) = common.grid {
        cfg.grid_n = grid;
    }
    Ok(cfg)
}

fn run() -> vline::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Transform(common) => {
            for f in cmd_transform(&load(&common)?)? {
                println!("wrote {}", f.display());
            }
        }
        Command::Spectrum { common, method } => {
            let mut cfg = load(&common)?;
            if let Some(m) = method {
                cfg.method = if m == "bessel" {
                    CoeffMethod::Bessel
                } else {
                    CoeffMethod::Direct
                };
            }
            for f in cmd_spectrum(&cfg)? {
                println!("wrote {}", f.display());
            }
        }
        Command::Compare {
            common,
            scheme,
            conservative_n,
        } => {
            let mut cfg = load(&common)?;
            if let Some(s) = scheme {
                cfg.scheme = match s.as_str() {
                    "standard" => SchemeSelection::Standard,
                    "interlaced" => SchemeSelection::Interlaced,
                    _ => SchemeSelection::Both,
                };
            }
            if conservative_n {
                cfg.conservative_n = true;
            }
            let outcome = cmd_compare(&cfg)?;
            print!("{}", outcome.summary);
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            if !outcome.bound_holds {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Bound(common) => {
            for f in cmd_bound(&load(&common)?)? {
                println!("wrote {}", f.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
