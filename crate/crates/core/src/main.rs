use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use multischur::cli::{apply_overrides, run, CliError};
use serde_json::Value;

/// Exact multi-Schur and refined Grothendieck computations over JSON.
///
/// Reads one JSON request from `--input` or stdin and writes one JSON
/// response to stdout.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Command to run (expand, skew, inner, eval, multischur, verify);
    /// overrides the request's `command` field.
    #[arg(long)]
    command: Option<String>,
    /// Read the request from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Weight cap for verification suites.
    #[arg(long)]
    max_weight: Option<usize>,
    /// Degree truncation D.
    #[arg(long)]
    truncation: Option<usize>,
    /// Seed for the randomized suites.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads for the coefficient loops.
    #[arg(long, env = "MULTISCHUR_THREADS")]
    threads: Option<usize>,
}

fn read_request(args: &Args) -> Result<Value, CliError> {
    let io_err = |e: std::io::Error| CliError { kind: "io".into(), message: e.to_string(), operation: "read".into() };
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(io_err)?,
        None if std::io::stdin().is_terminal() => String::new(),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
            s
        }
    };
    if text.trim().is_empty() {
        return Ok(Value::Object(Default::default()));
    }
    serde_json::from_str(&text).map_err(|e| CliError {
        kind: "usage".into(),
        message: format!("request is not valid JSON: {e}"),
        operation: "read".into(),
    })
}

fn emit(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.threads {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let outcome = read_request(&args).and_then(|mut req| {
        apply_overrides(&mut req, args.command.as_deref(), args.max_weight, args.truncation, args.seed)?;
        run(&req)
    });
    match outcome {
        Ok(r) => {
            emit(&r.body);
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(&e.to_json());
            ExitCode::from(2)
        }
    }
}
