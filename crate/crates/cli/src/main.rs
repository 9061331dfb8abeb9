use clap::{Parser, Subcommand};
use kac_cli::{
    cmd_bench, cmd_charpoly, cmd_pyramid, cmd_spectrum, cmd_verify, parse_format, parse_k_spec,
    parse_n_list, parse_routes, resolve_output_path, SweepConfig, UsageError, WeightsSource,
    EXIT_USAGE,
};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "kac")]
#[command(version)]
#[command(about = "Exact verification of the Borwein identity via the Sylvester-Kac matrix")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Sweep n and k, compute the identity by several routes, and check
    /// that every route agrees (exit 1 on any mismatch)
    Verify {
        /// Smallest order to check
        #[arg(long, default_value_t = 1)]
        n_min: usize,

        /// Largest order to check
        #[arg(long)]
        n_max: usize,

        /// Which k to visit: "all" or a comma-separated integer list
        #[arg(long, default_value = "all")]
        k: String,

        /// Routes to emit: "all" or a comma-separated subset of
        /// lhs_dp,rhs_dp,charpoly,rhs_enum,pyramid. The three
        /// polynomial-time routes are always computed and compared.
        #[arg(long, default_value = "lhs_dp,rhs_dp,charpoly")]
        routes: String,

        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,

        /// Output file (default: stdout). Relative paths join KAC_OUTPUT_DIR.
        #[arg(long)]
        output: Option<PathBuf>,

        /// Lift the enumeration and pyramid caps (sweeps may become slow)
        #[arg(long)]
        allow_large: bool,
    },

    /// Dump all n+1 exact eigenpairs of the Kac matrix S_n
    Spectrum {
        /// Matrix order parameter (S_n is (n+1) x (n+1))
        #[arg(long)]
        n: usize,

        /// Output format: json or csv
        #[arg(long, default_value = "json")]
        format: String,

        /// Output file (default: stdout). Relative paths join KAC_OUTPUT_DIR.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Dump the compressed characteristic-polynomial coefficients d_{k,n}
    Charpoly {
        /// Use the Kac weights for this order
        #[arg(long, conflicts_with = "weights")]
        kac: Option<usize>,

        /// Load custom weights from a {"a": [...], "b": [...]} JSON file
        #[arg(long)]
        weights: Option<PathBuf>,

        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,

        /// Output file (default: stdout). Relative paths join KAC_OUTPUT_DIR.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Dump the cube table of the stepped pyramid model
    Pyramid {
        /// Pyramid order
        #[arg(long)]
        n: usize,

        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,

        /// Output file (default: stdout). Relative paths join KAC_OUTPUT_DIR.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Time each route; capped routes are skipped above their caps
    Bench {
        /// Comma-separated list of orders, e.g. 10,20,40
        #[arg(long)]
        n: String,

        /// Which k to visit per order: "all" or a comma-separated list
        #[arg(long, default_value = "all")]
        k: String,

        /// Repetitions per measurement (median is reported)
        #[arg(long, default_value_t = 3)]
        reps: usize,

        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,

        /// Output file (default: stdout). Relative paths join KAC_OUTPUT_DIR.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, UsageError> {
    match path {
        None => Ok(Box::new(std::io::stdout().lock())),
        Some(p) => {
            let resolved = resolve_output_path(p);
            if let Some(parent) = resolved.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)
                        .map_err(|e| UsageError(format!("{}: {e}", parent.display())))?;
                }
            }
            let file = std::fs::File::create(&resolved)
                .map_err(|e| UsageError(format!("{}: {e}", resolved.display())))?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, UsageError> {
    match cli.command {
        Commands::Verify {
            n_min,
            n_max,
            k,
            routes,
            format,
            output,
            allow_large,
        } => {
            let cfg = SweepConfig {
                n_min,
                n_max,
                k: parse_k_spec(&k)?,
                routes: parse_routes(&routes)?,
                format: parse_format(&format)?,
                allow_large,
            };
            let mut out = open_output(&output)?;
            let code = cmd_verify(&cfg, &mut out)?;
            out.flush()?;
            Ok(code)
        }
        Commands::Spectrum { n, format, output } => {
            let mut out = open_output(&output)?;
            let code = cmd_spectrum(n, parse_format(&format)?, &mut out)?;
            out.flush()?;
            Ok(code)
        }
        Commands::Charpoly {
            kac,
            weights,
            format,
            output,
        } => {
            let source = match (kac, weights) {
                (Some(n), None) => WeightsSource::Kac(n),
                (None, Some(path)) => WeightsSource::File(path),
                _ => {
                    return Err(UsageError(
                        "exactly one of --kac N or --weights FILE is required".into(),
                    ))
                }
            };
            let mut out = open_output(&output)?;
            let code = cmd_charpoly(&source, parse_format(&format)?, &mut out)?;
            out.flush()?;
            Ok(code)
        }
        Commands::Pyramid { n, format, output } => {
            let mut out = open_output(&output)?;
            let code = cmd_pyramid(n, parse_format(&format)?, &mut out)?;
            out.flush()?;
            Ok(code)
        }
        Commands::Bench {
            n,
            k,
            reps,
            format,
            output,
        } => {
            let ns = parse_n_list(&n)?;
            let policy = parse_k_spec(&k)?;
            let mut out = open_output(&output)?;
            let code = cmd_bench(&ns, &policy, reps, parse_format(&format)?, &mut out)?;
            out.flush()?;
            Ok(code)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}
