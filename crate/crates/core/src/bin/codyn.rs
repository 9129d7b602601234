use std::process::ExitCode;

use clap::Parser;
use codynamic::cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("codyn: {e}");
            ExitCode::FAILURE
        }
    }
}
