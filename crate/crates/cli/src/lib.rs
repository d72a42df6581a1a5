//! Command-line front end for the `zalpha-core` routes.
//!
//! Exit codes: 0 pass, 1 numeric check failed, 2 usage or domain error,
//! 3 I/O error (including a missing or corrupt golden file).

pub mod args;
pub mod crosscheck;
pub mod error;
pub mod eval;
pub mod golden;
mod misc;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::error::{CliError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use crate::eval::{EvalRequest, Verdict};

/// Parse `argv`, run the command and return the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(Verdict::Pass) => EXIT_PASS,
        Ok(Verdict::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Verdict, CliError> {
    match command {
        Command::Eval(a) => {
            let mut req = match (a.d, a.alpha) {
                (Some(d), _) => EvalRequest::new(d as f64, a.u),
                (None, Some(alpha)) => EvalRequest::new(alpha, a.u),
                (None, None) => return Err(CliError::Usage("one of --d or --alpha is required".into())),
            };
            req.tol = a.tol;
            req.max_terms = a.max_terms;
            req.quad = a.quad.config();
            req.timing = a.timing;
            let report = eval::evaluate(a.route, &req)?;
            let text = match a.format {
                Format::Plain => eval::render_plain(&report),
                Format::Json => to_json(&report)?,
                Format::Csv => eval::render_csv(&report)?,
            };
            write_out(out, &text)?;
            Ok(report.verdict)
        }
        Command::Constants(a) => {
            let entries = golden::load(a.golden.as_deref())?;
            let t = golden::table(&entries)?;
            let text = match a.format {
                Format::Plain => golden::render_plain(&t),
                Format::Json => to_json(&t)?,
                Format::Csv => golden::render_csv(&t)?,
            };
            write_out(out, &text)?;
            Ok(t.verdict)
        }
        Command::Crosscheck(a) => {
            let report = crosscheck::run(&a)?;
            let text = match a.format {
                Format::Plain => crosscheck::render_plain(&report),
                Format::Json => to_json(&report)?,
                Format::Csv => crosscheck::render_csv(&report)?,
            };
            write_out(out, &text)?;
            Ok(report.verdict)
        }
        Command::Stirling(a) => {
            write_out(out, &misc::stirling(&a)?)?;
            Ok(Verdict::Pass)
        }
        Command::Zeta(a) => {
            write_out(out, &misc::zeta(&a)?)?;
            Ok(Verdict::Pass)
        }
        Command::Examples(a) => {
            write_out(out, &misc::examples(&a)?)?;
            Ok(Verdict::Pass)
        }
    }
}
