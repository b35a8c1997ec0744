//! `qderiv`: derivations and Lie transformation algebras of quandle algebras.
//!
//! Reports go to stdout as JSON (default) or plain text. Failures print an
//! `{"error": {...}}` object and exit nonzero. Setting `QDERIV_VERBOSE=1`
//! adds detail to text reports; JSON output does not change.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qderiv::exactla::FieldSpec;
use qderiv::quandle::{builtin, Quandle, QuandleData};

use commands::Output;
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "qderiv", version, about = "Derivations of quandle algebras over Q and GF(p)")]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Builtin quandle: trivial:N, dihedral:N, alexander:N:A, catalog:L or s3
    #[arg(long, global = true)]
    quandle: Option<String>,

    /// Quandle JSON file: {"n": N, "table": [[...]]}, 0-based entries
    #[arg(long, global = true)]
    file: Option<String>,

    /// Q or GF(p)
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Check the quandle axioms
    Validate,
    /// Involutive, latin, medial, connected and orbits
    Props,
    /// Basis of the derivation space
    Derivations,
    /// Symmetry relations and block shapes of dihedral derivations
    Symmetries,
    /// Lie transformation algebra generated by L_x and R_x
    Lietransform,
    /// Inner and outer derivation dimensions
    Inner,
    /// Augmentation ideal and J_X
    Ideals,
    /// Compare every embedded reference table with the solver
    Tables,
}

fn load_quandle(args: &Args) -> Result<Quandle, CliError> {
    match (&args.quandle, &args.file) {
        (Some(spec), None) => Ok(builtin(spec)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            let data: QuandleData = serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))?;
            Ok(Quandle::from_data(&data)?)
        }
        (Some(_), Some(_)) => Err(CliError::Usage("give only one of --quandle and --file".into())),
        (None, None) => Err(CliError::Usage("a quandle is required: --quandle or --file".into())),
    }
}

fn run(args: &Args, verbose: bool) -> Result<Output, CliError> {
    if args.command == Command::Tables {
        return Ok(commands::tables(verbose));
    }
    let field: FieldSpec = args.field.parse()?;
    let q = load_quandle(args)?;
    Ok(match args.command {
        Command::Validate => commands::validate(&q),
        Command::Props => commands::props(&q),
        Command::Derivations => commands::derivations(&q, field, verbose),
        Command::Symmetries => commands::symmetries(&q, field)?,
        Command::Lietransform => commands::lietransform(&q, field, verbose),
        Command::Inner => commands::inner(&q, field),
        Command::Ideals => commands::ideals(&q, field),
        Command::Tables => unreachable!("handled above"),
    })
}

fn emit(format: Format, json: &serde_json::Value, text: &str) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(json).expect("serializable")),
        Format::Text => print!("{text}"),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.kind().to_string());
            eprint!("{e}");
            println!("{}", serde_json::to_string(&err.to_json()).expect("serializable"));
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let verbose = std::env::var("QDERIV_VERBOSE").is_ok_and(|v| !v.is_empty() && v != "0");
    match run(&args, verbose) {
        Ok(out) => {
            emit(args.format, &out.json, &out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            emit(args.format, &err.to_json(), &format!("error: {err}\n"));
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
