use std::process::ExitCode;

use clap::Parser;

use menon_cli::{exit_code_for, limits_from_env, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match limits_from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    let report = run(&cli, &limits);
    print!("{}", report.render(cli.json));
    if let Some(err) = &report.record.error {
        eprintln!("error: {err}");
    }
    ExitCode::from(report.exit_code() as u8)
}
