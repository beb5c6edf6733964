use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use leflab_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = leflab_cli::run(&cli);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit as u8)
}
