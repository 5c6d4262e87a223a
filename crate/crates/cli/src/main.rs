use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use sconekit::engine::{EngineError, EngineRegistry};
use sconekit::kernel::{Checker, Context, Term, TypeError};
use sconekit::nbe;
use sconekit::parametricity::{self, ParamError};
use sconekit::surface::{self, print_term, ParseError};

#[derive(Debug, Parser)]
#[command(name = "sconekit", version, about = "Typecheck, normalize and translate terms of a small dependent type theory")]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Highest universe level plus one.
    #[arg(long, global = true, default_value_t = sconekit::kernel::DEFAULT_MAX_LEVEL)]
    max_level: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Typecheck a file and print its type.
    Check { file: PathBuf },
    /// Print the normal form of a term.
    Norm {
        file: PathBuf,
        /// Type to normalize at, overriding any ascription.
        #[arg(long = "type", value_name = "TY")]
        ty: Option<String>,
        #[arg(long, default_value = "nbe")]
        engine: String,
    },
    /// Evaluate a closed boolean to `true` or `false`.
    Canon {
        file: PathBuf,
        #[arg(long, default_value = "canonicity")]
        engine: String,
    },
    /// Print the parametricity witness of a closed term and its type.
    Param { file: PathBuf },
    /// Decide whether two terms are convertible at a type.
    Conv {
        left: PathBuf,
        right: PathBuf,
        #[arg(long = "type", value_name = "TY")]
        ty: String,
        #[arg(long, default_value = "nbe")]
        engine: String,
    },
    /// List the registered engines.
    Engines,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<TypeError> for Failure {
    fn from(e: TypeError) -> Self {
        Failure::Domain(format!("type error: {e}"))
    }
}

impl From<ParamError> for Failure {
    fn from(e: ParamError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Unknown { .. } => Failure::Usage(e.to_string()),
            EngineError::Type(t) => t.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
struct Report {
    command: &'static str,
    input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl Report {
    fn new(command: &'static str, input: Value) -> Report {
        Report {
            command,
            input,
            result: None,
            normal_form: None,
            witness_type: None,
            error: None,
        }
    }

    fn text(&self) -> String {
        match (self.command, &self.witness_type) {
            ("param", Some(wt)) => format!(
                "witness type: {wt}\nwitness: {}",
                self.result.as_deref().unwrap_or_default()
            ),
            _ => self
                .result
                .clone()
                .or_else(|| self.normal_form.clone())
                .unwrap_or_default(),
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Norm { .. } => "norm",
        Command::Canon { .. } => "canon",
        Command::Param { .. } => "param",
        Command::Conv { .. } => "conv",
        Command::Engines => "engines",
    }
}

fn input_of(c: &Command) -> Value {
    let path = |p: &Path| Value::String(p.display().to_string());
    match c {
        Command::Check { file }
        | Command::Norm { file, .. }
        | Command::Canon { file, .. }
        | Command::Param { file } => path(file),
        Command::Conv { left, right, .. } => Value::Array(vec![path(left), path(right)]),
        Command::Engines => Value::Null,
    }
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    Failure::Usage(format!("{}:{e}", path.display()))
}

fn read_document(path: &Path) -> Result<(Term, Option<Term>), Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    surface::parse_document(&src)
        .and_then(|d| d.resolve())
        .map_err(|e| parse_failure(path, e))
}

fn read_type_arg(src: &str) -> Result<Term, Failure> {
    surface::read_type(src).map_err(|e| Failure::Usage(format!("--type:{e}")))
}

/// The term of a file together with its type: the override, the
/// ascription, or the inferred type, in that order.
fn typed_input(checker: &Checker, path: &Path, ty: Option<Term>) -> Result<(Term, Term), Failure> {
    let (t, ascribed) = read_document(path)?;
    let empty = Context::empty();
    let ty = match ty.or(ascribed) {
        Some(ty) => {
            checker.is_type(&empty, &ty)?;
            checker.check(&empty, &t, &ty)?;
            ty
        }
        None => checker.infer(&empty, &t)?,
    };
    Ok((t, ty))
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    let checker = Checker::with_max_level(cli.max_level);
    let registry = EngineRegistry::standard();
    let empty = Context::empty();
    match &cli.command {
        Command::Check { file } => {
            let (_, ty) = typed_input(&checker, file, None)?;
            report.result = Some(print_term(&ty));
        }
        Command::Norm { file, ty, engine } => {
            let normalizer = registry.normalizer(engine)?;
            let ty = ty.as_deref().map(read_type_arg).transpose()?;
            let (t, ty) = typed_input(&checker, file, ty)?;
            let nf = normalizer.normalize(&empty, &ty, &t)?;
            report.normal_form = Some(print_term(&nf.embed()));
        }
        Command::Canon { file, engine } => {
            let decider = registry.decider(engine)?;
            let (t, ty) = typed_input(&checker, file, Some(Term::Bool))?;
            debug_assert_eq!(ty, Term::Bool);
            report.result = Some(decider.decide(&t)?.to_string());
        }
        Command::Param { file } => {
            let (t, ty) = typed_input(&checker, file, None)?;
            let out = parametricity::translate(&checker, &t, &ty)?;
            let pi = out.predicate_pi(&ty);
            report.witness_type = Some(print_term(&nbe::norm_type_unchecked(&empty, &pi).embed()));
            report.result = Some(print_term(&out.witness));
        }
        Command::Conv {
            left,
            right,
            ty,
            engine,
        } => {
            let normalizer = registry.normalizer(engine)?;
            let ty = read_type_arg(ty)?;
            let (a, _) = typed_input(&checker, left, Some(ty.clone()))?;
            let (b, _) = typed_input(&checker, right, Some(ty.clone()))?;
            let equal = normalizer.conv(&empty, &ty, &a, &b)?;
            report.result = Some(if equal { "equal" } else { "not equal" }.to_string());
        }
        Command::Engines => {
            report.result = Some(format!(
                "normalizers: {}\ndeciders: {}",
                registry.normalizer_names().join(", "),
                registry.decider_names().join(", ")
            ));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(command_name(&cli.command), input_of(&cli.command));
    let outcome = run(&cli, &mut report);
    if let Err(f) = &outcome {
        report.error = Some(f.message().to_string());
    }
    if cli.json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else if let Err(f) = &outcome {
        eprintln!("error: {}", f.message());
    } else {
        println!("{}", report.text());
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => ExitCode::from(f.code()),
    }
}
