use std::io::Write;
use std::process::ExitCode;

use barhom::cli::{error_exit_code, run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if report.artifacts.is_empty() {
                let mut out = std::io::stdout().lock();
                if out.write_all(report.payload.as_bytes()).is_err() {
                    return ExitCode::from(1);
                }
            }
            let mut err = std::io::stderr().lock();
            let _ = writeln!(
                err,
                "{} {} in {:.3}s",
                report.command,
                report.status.as_str(),
                report.elapsed.as_secs_f64()
            );
            for path in &report.artifacts {
                let _ = writeln!(err, "wrote {}", path.display());
            }
            if let Some(first) = &report.first_offending {
                let _ = writeln!(err, "first offending: {first}");
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
