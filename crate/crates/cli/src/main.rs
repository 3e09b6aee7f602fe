// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use diffext_cli::{run, OutputFormat, RepArg, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "diffext",
    version,
    about = "Seeded exact verification of derivation cocycles and their central extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report per-case results.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        degree_cap: u32,
        #[arg(long, value_enum, default_value_t = RepArg::Natural)]
        rep: RepArg,
        /// Derivation: `p1`, `p2`, or comma-separated coefficients.
        #[arg(long, default_value = "p1")]
        d1: String,
        #[arg(long, default_value = "p2")]
        d2: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Verify {
        suite,
        samples,
        seed,
        degree_cap,
        rep,
        d1,
        d2,
        output,
    } = cli.command;
    let config = RunConfig {
        suite,
        samples,
        seed,
        degree_cap,
        rep,
        d1,
        d2,
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match output {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => format!("{}\n", report.to_json()),
    };
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    ExitCode::from(report.exit_code() as u8)
}
