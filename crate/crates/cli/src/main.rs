use std::io::Write;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;
use unigen::{run, Cli, CliError, OutputFormat};

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    let mut text = body.to_string();
    if cli.footer && cli.format == OutputFormat::Text {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        text.push_str(&format!("# generated_unix_time: {secs}\n"));
    }
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli.command).and_then(|outcome| {
        emit(&cli, &outcome.render(cli.format))?;
        Ok(outcome.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(detail) = e.detail() {
                eprint!("{detail}");
            }
            ExitCode::from(2)
        }
    }
}
