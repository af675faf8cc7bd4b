use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use edgesat_cli::commands::{EXIT_DOMAIN, EXIT_USAGE};
use edgesat_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };

    let mut input = String::new();
    if cli.command.reads_graph() {
        let read = match &cli.input {
            Some(path) => std::fs::read_to_string(path).map(|s| input = s),
            None => std::io::stdin().read_to_string(&mut input).map(|_| ()),
        };
        if let Err(e) = read {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(EXIT_DOMAIN as u8);
        }
    }

    let out = run(&cli.command, &input);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
