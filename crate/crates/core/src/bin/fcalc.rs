use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fcalc::session::{parse_session, run_session, RunOptions, SUBCOMMANDS};

#[derive(Parser)]
#[command(name = "fcalc", version, about = "Frobenius calculus over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file (`-` reads standard input).
    Run {
        file: PathBuf,
        /// Emit one JSON document instead of text blocks.
        #[arg(long)]
        json: bool,
        /// Do not read or write the on-disk Gröbner basis cache.
        #[arg(long)]
        no_cache: bool,
        /// S-polynomial reductions allowed per Gröbner basis.
        #[arg(long)]
        budget: Option<u64>,
        /// Largest level searched for integral exponents.
        #[arg(long, default_value_t = fcalc::adjunction::DEFAULT_EMAX)]
        emax: u32,
        /// Composites tried by sharp purity and direct-sum commands.
        #[arg(long, default_value_t = fcalc::maps::DEFAULT_NMAX)]
        nmax: u32,
    },
    /// List the command names accepted after `check`, `compute` or `verify`.
    Commands,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Cmd::Commands => {
            for s in SUBCOMMANDS {
                println!("{s}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Run {
            file,
            json,
            no_cache,
            budget,
            emax,
            nmax,
        } => {
            let mut text = String::new();
            let read = if file.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(&file).map(|t| text = t)
            };
            if let Err(e) = read {
                eprintln!("fcalc: cannot read {}: {e}", file.display());
                return ExitCode::from(2);
            }
            let session = match parse_session(&text) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let opts = RunOptions {
                cache: !no_cache,
                budget,
                emax,
                nmax,
                ..RunOptions::default()
            };
            let name = file.to_string_lossy();
            let report = run_session(&session, Some(&name), &opts);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
