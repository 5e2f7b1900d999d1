use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use eulertrail_cli::{execute, Cli};

const INPUT_ERROR: u8 = 1;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(INPUT_ERROR);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            // A closed pipe on stdout is not an error of the command.
            let _ = writeln!(std::io::stdout().lock(), "{}", report.render(cli.format));
            if !cli.quiet {
                eprintln!("{}", report.summary);
            }
            ExitCode::from(report.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
