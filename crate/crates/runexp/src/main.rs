use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use runexp::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let status = run(cli, &mut out, &mut err);
    let flushed = out.flush();
    match (status, flushed) {
        (Ok(s), Ok(())) => ExitCode::from(s.exit_code() as u8),
        (Err(e), _) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(2)
        }
        (Ok(_), Err(e)) => {
            let _ = writeln!(err, "error: writing output: {e}");
            ExitCode::from(2)
        }
    }
}
