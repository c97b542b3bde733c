use std::process::ExitCode;

use clap::Parser;
use seccat::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("seccat: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Err(e) => {
            eprintln!("seccat: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
