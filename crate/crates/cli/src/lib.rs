//! Workspace files, reports and the `stabcat` command line on top of
//! `stabcat-core`.

pub mod commands;
pub mod encode;
pub mod error;
pub mod search;
pub mod workspace;

pub use commands::{load_workspace, run, Cli, Command, Format, Report};
pub use error::{CliError, Result};
pub use workspace::{Document, LoadOptions, Workspace};

use std::ffi::OsString;

use clap::Parser;
use serde_json::json;

/// Parses arguments, runs the command and writes the report. Returns the
/// process exit status; errors go to standard error (and to the report as
/// JSON when `--format json`).
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (body, code) = match run(&cli) {
        Ok(r) => (r.render(cli.format), r.exit_code),
        Err(e) => {
            eprintln!("error: {e}");
            if cli.format == Format::Json {
                let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                (format!("{}\n", serde_json::to_string_pretty(&v).expect("errors serialize")), e.exit_code())
            } else {
                return e.exit_code();
            }
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{body}"),
    }
    code
}
