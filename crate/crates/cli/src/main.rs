use std::process::ExitCode;

use clap::Parser;

use classprod_cli::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(&cli))
}
