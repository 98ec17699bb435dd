//! `decmin`: solve, enumerate, price, and verify instances given as JSON
//! files.  See the guide for the file format and certificate layout.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use decmin_cli::{
    cmd_cheapest, cmd_enumerate, cmd_solve, cmd_verify, parse_bounds, render_cheapest,
    render_solve, render_verify, to_json, CliError, VectorSource,
};

#[derive(Parser)]
#[command(name = "decmin", version, about = "egalitarian optimization over base-polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of the human summary.
    #[arg(long, global = true)]
    json: bool,

    /// Largest ground set full subset scans will accept.
    #[arg(long, global = true, default_value_t = 20)]
    scan_limit: usize,

    /// Accepted for harness compatibility; solver output never depends
    /// on it.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a dec-min element with full certificates.
    Solve {
        /// Instance file (JSON).
        instance: PathBuf,
    },
    /// List every member inside bounds, one JSON object per line.
    Enumerate {
        instance: PathBuf,
        /// Uniform bounds `lo,hi`; derived from the oracle when omitted.
        #[arg(long, allow_hyphen_values = true)]
        bounds: Option<String>,
        /// Cap on grid points (default one million).
        #[arg(long)]
        max_points: Option<u64>,
    },
    /// Minimize a linear cost over the dec-min set.
    Cheapest {
        instance: PathBuf,
        /// JSON file mapping every element name to a cost.
        #[arg(long)]
        costs: PathBuf,
        /// Cross-check the result against brute-force enumeration.
        #[arg(long)]
        verify: bool,
        /// Uniform bounds `lo,hi` for the cross-check.
        #[arg(long, allow_hyphen_values = true)]
        bounds: Option<String>,
    },
    /// Check membership, the dec-min property, and optional dual criteria.
    Verify {
        instance: PathBuf,
        /// Comma-separated values in ground-set order.
        #[arg(long, conflicts_with = "from_solve", allow_hyphen_values = true)]
        vector: Option<String>,
        /// Comma-separated dual vector to check criteria against.
        #[arg(long, allow_hyphen_values = true)]
        pi: Option<String>,
        /// Read vectors from a `solve --json` document (`-` for stdin).
        #[arg(long)]
        from_solve: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let scan = cli.scan_limit;
    match cli.command {
        Command::Solve { instance } => {
            let doc = cmd_solve(&instance, scan)?;
            Ok(if cli.json { to_json(&doc) } else { render_solve(&doc) })
        }
        Command::Enumerate { instance, bounds, max_points } => {
            let bounds = bounds.as_deref().map(parse_bounds).transpose()?;
            let lines = cmd_enumerate(&instance, bounds, max_points, scan)?;
            let mut out = lines.join("\n");
            if !out.is_empty() {
                out.push('\n');
            }
            Ok(out)
        }
        Command::Cheapest { instance, costs, verify, bounds } => {
            let bounds = bounds.as_deref().map(parse_bounds).transpose()?;
            let doc = cmd_cheapest(&instance, &costs, verify, bounds, scan)?;
            Ok(if cli.json { to_json(&doc) } else { render_cheapest(&doc) })
        }
        Command::Verify { instance, vector, pi, from_solve } => {
            let source = match (vector, &from_solve) {
                (Some(text), None) => VectorSource::Inline(text),
                (None, Some(path)) => {
                    let text = if path.as_os_str() == "-" {
                        let mut buf = String::new();
                        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError {
                            message: format!("cannot read stdin: {e}"),
                            code: 2,
                        })?;
                        buf
                    } else {
                        std::fs::read_to_string(path).map_err(|e| CliError {
                            message: format!("cannot read {}: {e}", path.display()),
                            code: 2,
                        })?
                    };
                    VectorSource::FromSolve(text)
                }
                _ => {
                    return Err(CliError {
                        message: "verify needs exactly one of --vector or --from-solve".into(),
                        code: 2,
                    })
                }
            };
            let doc = cmd_verify(&instance, source, pi, scan)?;
            Ok(if cli.json { to_json(&doc) } else { render_verify(&doc) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
