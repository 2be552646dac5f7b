use std::process::ExitCode;

use clap::Parser;

use rml::commands::{execute, Cli};
use rml::CliError;

fn run(cli: &Cli) -> Result<bool, CliError> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))?;
    }
    let outcome = execute(&cli.command)?;
    if cli.json {
        println!("{}", outcome.report.to_json());
    } else {
        for line in &outcome.lines {
            println!("{line}");
        }
    }
    Ok(!outcome.failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rml: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
