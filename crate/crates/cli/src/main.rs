mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::{Failure, Outcome};

fn emit(out: &Outcome, format: Format) {
    let mut stdout = std::io::stdout().lock();
    let _ = match format {
        Format::Text => stdout.write_all(out.text.as_bytes()),
        Format::Json => {
            let body = serde_json::to_string_pretty(&out.json).expect("json values serialize");
            writeln!(stdout, "{body}")
        }
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // usage errors exit with 2, --help and --version with 0
        Err(e) => e.exit(),
    };
    match commands::run(&cli.command, cli.global.max_n) {
        Ok(out) => {
            emit(&out, cli.global.format);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
