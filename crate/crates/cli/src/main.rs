use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ginv_core::campaign::{self, Family};
use ginv_core::geninv::{self, InverseKind};
use ginv_core::io::{self, Input};
use ginv_core::report;
use ginv_core::{Error, FieldConfig};

const EXIT_MISSING: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

/// Exact group, Drazin and Moore-Penrose inverses.
///
/// Set GINV_FIELD to a field block such as
/// {"base":"gaussian_rationals","involution":"conjugation"} to override the
/// field of every input file.
#[derive(Parser, Debug)]
#[command(name = "ginv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the matrix of a spec.
    Build(InputArgs),
    /// Print the case of a double star spec, or the star pairings of a D-linked spec.
    Classify(InputArgs),
    /// Group inverse.
    Group(InputArgs),
    /// Drazin inverse, index and minimal polynomial.
    Drazin(InputArgs),
    /// Moore-Penrose inverse.
    Mp(InputArgs),
    /// Check a candidate inverse against its defining equations.
    Verify(VerifyArgs),
    /// Randomized cross-validation of closed forms against the general algorithms.
    Proptest(ProptestArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Double star or D-linked spec file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Matrix file.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the general algorithm when a closed form applies.
    #[arg(long)]
    no_oracle: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Group,
    Drazin,
    Mp,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    candidate: PathBuf,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Drazin exponent to test; defaults to the matrix order.
    #[arg(long)]
    index: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    DoubleStar,
    DLinked,
    General,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::DoubleStar => Family::DoubleStar,
            FamilyArg::DLinked => Family::DLinked,
            FamilyArg::General => Family::General,
        }
    }
}

#[derive(Args, Debug)]
struct ProptestArgs {
    #[arg(long, default_value_t = 100)]
    cases: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
}

/// A finished command: the JSON to print and the exit code.
struct Outcome {
    value: Value,
    code: u8,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, code: 0 }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ginv: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> CliResult<u8> {
    let field = field_override()?;
    let (outcome, out) = match command {
        Command::Build(args) => (build(&load(&args, field)?)?, args.out),
        Command::Classify(args) => (classify(&load(&args, field)?)?, args.out),
        Command::Group(args) => (inverse(InverseKind::Group, &load(&args, field)?, args.no_oracle)?, args.out),
        Command::Drazin(args) => (inverse(InverseKind::Drazin, &load(&args, field)?, args.no_oracle)?, args.out),
        Command::Mp(args) => (
            inverse(InverseKind::MoorePenrose, &load(&args, field)?, args.no_oracle)?,
            args.out,
        ),
        Command::Verify(args) => (verify(&args, field)?, args.out),
        Command::Proptest(args) => (proptest(&args)?, None),
    };
    emit(&outcome.value, out.as_deref())?;
    Ok(outcome.code)
}

fn field_override() -> CliResult<Option<FieldConfig>> {
    match std::env::var("GINV_FIELD") {
        Ok(text) if !text.trim().is_empty() => {
            Ok(Some(io::parse_field(&text).map_err(|e| format!("GINV_FIELD: {e}"))?))
        }
        _ => Ok(None),
    }
}

fn read(path: &Path) -> CliResult<String> {
    Ok(fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn load(args: &InputArgs, field: Option<FieldConfig>) -> CliResult<Input> {
    let with_path = |path: &Path, e: Error| format!("{}: {e}", path.display());
    match (&args.source.spec, &args.source.matrix) {
        (Some(path), _) => match io::parse_input(&read(path)?, field).map_err(|e| with_path(path, e))? {
            Input::Matrix(_) => Err(format!("{}: expected a spec, found a matrix", path.display()).into()),
            spec => Ok(spec),
        },
        (None, Some(path)) => Ok(Input::Matrix(
            io::parse_matrix(&read(path)?, field).map_err(|e| with_path(path, e))?,
        )),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn emit(value: &Value, out: Option<&Path>) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => Ok(fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(input: &Input) -> CliResult<Outcome> {
    Ok(Outcome::ok(io::matrix_value(&report::matrix_of(input)?)))
}

fn classify(input: &Input) -> CliResult<Outcome> {
    match report::classify(input)? {
        Some(value) => Ok(Outcome::ok(value)),
        None => Err("classify needs --spec, not --matrix".into()),
    }
}

fn inverse(kind: InverseKind, input: &Input, no_oracle: bool) -> CliResult<Outcome> {
    let dual = report::dual_report(kind, input, no_oracle)?;
    let code = match dual.agreement {
        Some(false) => EXIT_DISAGREE,
        _ if !dual.exists => EXIT_MISSING,
        _ => 0,
    };
    Ok(Outcome {
        value: dual.value,
        code,
    })
}

fn verify(args: &VerifyArgs, field: Option<FieldConfig>) -> CliResult<Outcome> {
    let a = io::parse_matrix(&read(&args.matrix)?, field)?;
    let x = io::parse_matrix(&read(&args.candidate)?, field)?;
    let mut value = match args.kind {
        KindArg::Group | KindArg::Drazin => {
            let (mut head, k) = match args.kind {
                KindArg::Group => (json!({ "kind": "group" }), 1),
                _ => {
                    let k = args.index.unwrap_or(a.rows());
                    (json!({ "kind": "drazin", "index": k }), k)
                }
            };
            let flags = geninv::drazin_equations(&a, &x, k).ok_or_else(|| {
                Error::DimensionMismatch(format!(
                    "candidate is {:?} and matrix is {:?}; both must be square of one shape over one field",
                    x.shape(),
                    a.shape()
                ))
            })?;
            let power = |e: usize| match e {
                0 => "I".to_string(),
                1 => "A".to_string(),
                _ => format!("A^{e}"),
            };
            let names = [
                format!("{} X = {}", power(k + 1), power(k)),
                "X A X = X".to_string(),
                "A X = X A".to_string(),
            ];
            head["equations"] = names
                .into_iter()
                .zip(flags)
                .map(|(n, ok)| json!({ "equation": n, "holds": ok }))
                .collect();
            head
        }
        KindArg::Mp => {
            let flags = geninv::verify_penrose(&a, &x)?;
            let names = ["A X A = A", "X A X = X", "(A X)* = A X", "(X A)* = X A"];
            let eqs: Value = names
                .into_iter()
                .zip(flags.as_array())
                .map(|(n, ok)| json!({ "equation": n, "holds": ok }))
                .collect();
            json!({ "kind": "mp", "equations": eqs })
        }
    };
    let valid = value["equations"]
        .as_array()
        .is_some_and(|eqs| eqs.iter().all(|e| e["holds"] == Value::Bool(true)));
    value["valid"] = Value::Bool(valid);
    Ok(Outcome {
        value,
        code: if valid { 0 } else { EXIT_MISSING },
    })
}

fn proptest(args: &ProptestArgs) -> CliResult<Outcome> {
    let start = Instant::now();
    let report = campaign::run_campaign(args.cases, args.seed, args.family.map(Family::from))?;
    // Timing goes to stderr so that reports for one seed are byte-identical.
    eprintln!("ginv: {} cases in {:.2?}", report.cases_run, start.elapsed());
    let code = if report.passed() { 0 } else { EXIT_DISAGREE };
    Ok(Outcome {
        value: serde_json::to_value(&report)?,
        code,
    })
}
