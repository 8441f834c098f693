use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use wpvol_cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(&config, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
