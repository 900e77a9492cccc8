use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use elpga_cli::{CliError, FigureKind};

#[derive(Parser)]
#[command(name = "elpga", version, about = "Elliptic projective geometric algebra scenes")]
struct Args {
    /// Tolerance for Plücker, grade and classification checks.
    #[arg(long, global = true, default_value_t = elpga::EPSILON)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the queries of a scene and print a JSON report.
    Eval { scene: PathBuf },
    /// Sample a figure from a scene and write SVG and CSV files.
    Figure {
        scene: PathBuf,
        /// circle-trajectory, clifford-parallels or rotation-flow.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Output path; the extension is replaced by .svg and .csv.
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(args: Args) -> Result<(), CliError> {
    let tol = elpga_cli::check_tolerance(args.tolerance)?;
    match args.command {
        Command::Eval { scene } => {
            let report = elpga_cli::eval_file(&scene, tol)?;
            let text = serde_json::to_string_pretty(&report).map_err(|e| CliError::invalid(e.to_string()))?;
            println!("{text}");
        }
        Command::Figure { scene, kind, samples, out } => {
            let kind = FigureKind::from_name(&kind).ok_or_else(|| {
                let known: Vec<_> = FigureKind::ALL.iter().map(|k| k.name()).collect();
                CliError::invalid(format!("unknown figure kind `{kind}` (known: {})", known.join(", ")))
            })?;
            let (svg, csv) = elpga_cli::figure_file(&scene, kind, samples, &out, tol)?;
            eprintln!("wrote {} and {}", svg.display(), csv.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
