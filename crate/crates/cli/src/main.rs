//! `nca`: batch front end printing one JSON document per run.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nca::json::SCHEMA;

/// Bound on input sizes when neither `--max-n` nor `NCA_MAX_N` is given.
pub const DEFAULT_INPUT_MAX_N: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "nca", version, about = "Non-crossing tableaux, Specht modules, Temperley-Lieb and Plücker straightening")]
struct Cli {
    /// Print Young diagrams and formulas instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Size bound for inputs and verification suites.
    #[arg(long, global = true, env = "NCA_MAX_N")]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the tableaux of a shape.
    Enumerate(EnumerateArgs),
    /// Map a standard tableau to the non-crossing one with the same reading, or back.
    Biject(BijectArgs),
    /// Write a polynomial in a non-crossing (or standard) basis.
    Decompose(DecomposeArgs),
    /// Write a Plücker monomial in non-crossing monomials.
    Straighten(StraightenArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Syt,
    Nct,
    Ssyt,
    Snct,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Parts of the shape, e.g. `3,2,1`.
    #[arg(long)]
    pub shape: String,
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Weight for `ssyt` and `snct`, e.g. `2,1`.
    #[arg(long)]
    pub weight: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Decide from the input.
    Auto,
    SytToNct,
    NctToSyt,
}

#[derive(Args, Debug)]
pub struct TableauInput {
    /// Tableau JSON `{"shape":[..],"columns":[[..]]}`: a file path, `-` for stdin, or inline.
    #[arg(long, conflicts_with = "columns")]
    pub tableau: Option<String>,
    /// Columns written inline, e.g. `1,3;2,4`; for bitableaux `1,2|1,3;2|2`.
    #[arg(long)]
    pub columns: Option<String>,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    #[command(flatten)]
    pub input: TableauInput,
    #[arg(long, value_enum, default_value = "auto")]
    pub direction: Direction,
    /// Map the image back and report whether the input is recovered.
    #[arg(long)]
    pub round_trip: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    SpechtNct,
    SpechtSyt,
    Bitableau,
    Tl,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[command(flatten)]
    pub input: TableauInput,
}

#[derive(Args, Debug)]
pub struct StraightenArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Factors separated by commas, e.g. `13,24`; use dots inside a factor for indices
    /// above 9, e.g. `1.10,2.11`.
    #[arg(long)]
    pub monomial: String,
    /// Pairwise rewriting for any `m`, with a step log and no promise to finish.
    #[arg(long)]
    pub explore: bool,
    #[arg(long, default_value_t = 1000)]
    pub max_steps: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of suite names.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

/// A failure with a stable code; `payload` is kept for reports that failed.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub payload: Option<Value>,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into(), payload: None }
    }
}

impl From<nca::Error> for CliError {
    fn from(e: nca::Error) -> Self {
        CliError::new(e.code(), e.to_string())
    }
}

/// What a command hands back: the JSON payload and its text rendering.
pub struct Output {
    pub payload: Value,
    pub pretty: String,
}

pub type CmdResult = Result<Output, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // help and version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = envelope("usage", Err(CliError::new("usage", e.to_string().trim_end())), 0.0, "");
            emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let (name, provenance, result) = match &cli.command {
        Command::Enumerate(a) => ("enumerate", commands::ENUMERATE, commands::enumerate(a, &cli)),
        Command::Biject(a) => ("biject", commands::BIJECT, commands::biject(a, &cli)),
        Command::Decompose(a) => ("decompose", commands::decompose_provenance(a.target), commands::decompose(a, &cli)),
        Command::Straighten(a) => ("straighten", commands::STRAIGHTEN, commands::straighten(a, &cli)),
        Command::Verify(a) => ("verify", commands::VERIFY, commands::verify(a, &cli)),
    };
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    let ok = result.is_ok();
    if cli.pretty {
        match &result {
            Ok(out) => emit(&out.pretty),
            Err(e) => eprintln!("error [{}]: {}", e.code, e.message),
        }
    } else {
        let doc = envelope(name, result, ms, provenance);
        emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// a closed pipe on stdout is not worth a panic
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

impl Cli {
    pub fn input_limit(&self) -> usize {
        self.max_n.unwrap_or(DEFAULT_INPUT_MAX_N)
    }
}

fn envelope(command: &str, result: CmdResult, ms: f64, provenance: &str) -> Value {
    let mut doc = json!({
        "schema": SCHEMA,
        "command": command,
        "timing": {"ms": ms},
        "provenance": provenance,
    });
    match result {
        Ok(out) => {
            doc["status"] = json!("ok");
            doc["payload"] = out.payload;
        }
        Err(e) => {
            doc["status"] = json!("error");
            doc["error"] = json!({"code": e.code, "message": e.message});
            doc["payload"] = e.payload.unwrap_or(Value::Null);
        }
    }
    doc
}
