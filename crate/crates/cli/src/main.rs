mod args;
mod commands;

use clap::Parser;
use minrho::Error;
use std::process::ExitCode;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) => 2,
        Error::Domain(_) => 3,
        Error::Resource(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("minrho: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
