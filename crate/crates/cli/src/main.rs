use std::process::ExitCode;

use clap::Parser;
use zariski_cli::commands::{self, write_atomic};
use zariski_cli::Cli;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cert = match commands::run(&cli.command, argv) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = write_atomic(path, &(cert.to_json() + "\n")) {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    }
    if cli.json {
        println!("{}", cert.to_json());
    } else {
        print!("{}", cert.summary());
    }
    ExitCode::from(cert.exit_code() as u8)
}
