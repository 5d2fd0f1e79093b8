//! Command-line front end: workspace files, verification reports and the
//! `crossbial` subcommands.

pub mod commands;
pub mod report;
pub mod workspace;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;

use commands::{is_input_error, run, Cli, Format};
use report::{Outcome, Verdict};

/// Exit code for a passing verdict.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a verified failure.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage, I/O, parse and configuration errors.
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (program name first), runs the command, prints the report
/// and returns the exit code.
pub fn main_with(args: Vec<OsString>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    let command: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) if is_input_error(&e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => Outcome::failed(e.to_string()),
    };
    let timing = cli.timing.then(|| start.elapsed().as_secs_f64());
    let doc = outcome.into_document(command, timing);
    let text = match cli.format {
        Format::Json => doc.to_json(),
        Format::Text => doc.to_text(),
    };
    let mut out = std::io::stdout().lock();
    if out
        .write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return EXIT_USAGE;
    }
    match doc.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
    }
}
