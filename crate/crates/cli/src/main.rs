mod cli;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use heatcount_core::Error;
use serde_json::json;

use crate::cli::{Cli, Format};

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) => 2,
        Error::Consistency(_) | Error::Degenerate(_) => 3,
        Error::Resource(_) | Error::Divergence(_) | Error::SingularPoint(_) | Error::Io(_) => 1,
    }
}

fn fail(e: &Error) -> ExitCode {
    let body = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
    eprintln!("{body}");
    ExitCode::from(exit_code(e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            return fail(&Error::InvalidArgument("--threads must be positive".into()));
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail(&Error::InvalidArgument(format!("thread pool: {e}")));
        }
    }
    let value = match commands::run(&cli) {
        Ok(v) => render::round_floats(v),
        Err(e) => return fail(&e),
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&value).expect("json values serialize"),
        Format::Table => render::table(&value),
    };
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
