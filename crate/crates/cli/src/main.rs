mod args;
mod commands;
mod error;
mod record;

use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use error::exit;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match &cli.command {
        Command::Group(a) => commands::group(a),
        Command::Trees(a) => commands::trees(a),
        Command::Snf(a) => commands::snf(a),
        Command::Sweep(a) => commands::sweep(a),
    };
    let code = match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            let _ = stdout.flush();
            outcome.code
        }
        Err(e) => {
            eprintln!("critgroup: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
