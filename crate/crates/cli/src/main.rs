//! `compl` — command-line frontend for the complement calculus.
//!
//! Output is JSON on stdout: `{"status", "payload", "diagnostics"}` with
//! exit code 0 on success. Human-readable tables are behind
//! `--format table`. Exit codes: 2 usage, 3 malformed JSON input, 4 domain
//! error, 1 I/O.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use complements::adjunction::DifferentInput;
use complements::arrangement::{
    enumerate_candidate_exceptional, ArrangementPair, NEF_CONVENTION_NOTE,
};
use complements::boundary::Boundary;
use complements::curve::CurvePair;
use complements::dualgraph::DualGraph;
use complements::fixtures;
use complements::lct::ThresholdProblem;
use complements::rational::Rational;
use complements::registry::ComplementRegistry;
use complements::sets::CoefficientSet;

const DEFAULT_SEARCH_CAP: u64 = 100;
const CAP_ENV: &str = "COMPLEMENT_SEARCH_CAP";

#[derive(Parser)]
#[command(
    name = "compl",
    version,
    about = "Exact-rational complement indices, exceptionality tables, dual-graph \
             discrepancies and log-canonical-threshold functions"
)]
struct Cli {
    /// Output format for successful results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal complement index of a boundary on the projective line.
    Curve(CurveArgs),
    /// Minimal complement index of a hyperplane-arrangement boundary on P^d.
    Arrangement(ArrangementArgs),
    /// Exceptionality enumerations.
    Except {
        #[command(subcommand)]
        command: ExceptCommand,
    },
    /// Coefficient-set membership and different coefficients.
    Coeffs {
        #[command(subcommand)]
        command: CoeffsCommand,
    },
    /// Resolution dual-graph analyses.
    Dualgraph {
        #[command(subcommand)]
        command: DualgraphCommand,
    },
    /// Piecewise-linear threshold tables.
    Lct {
        #[command(subcommand)]
        command: LctCommand,
    },
    /// Named example inputs shipped with the tool.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
}

#[derive(Args)]
struct CurveArgs {
    /// Standard multiplicities, e.g. `2,3,5` for coefficients 1/2, 2/3, 4/5.
    #[arg(long, conflicts_with = "boundary", required_unless_present = "boundary")]
    points: Option<String>,
    /// Boundary JSON file: `[{"label": "P1", "coeff": "1/2"}, ...]`.
    #[arg(long)]
    boundary: Option<PathBuf>,
    /// Search cap for the minimal index (default: $COMPLEMENT_SEARCH_CAP or 100).
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct ArrangementArgs {
    /// Ambient projective dimension.
    #[arg(long, required_unless_present = "boundary")]
    dim: Option<u32>,
    /// Comma-separated rational coefficients, e.g. `1/2,2/3,4/5,6/7`.
    #[arg(long, conflicts_with = "boundary", required_unless_present = "boundary")]
    coeffs: Option<String>,
    /// Arrangement JSON file: `{"dim": 2, "boundary": [...]}`.
    #[arg(long)]
    boundary: Option<PathBuf>,
    /// Search cap for the minimal index (default: $COMPLEMENT_SEARCH_CAP or 100).
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Subcommand)]
enum ExceptCommand {
    /// Enumerate candidate-exceptional standard collections (m_1,...,m_{d+2}).
    Enumerate {
        #[arg(long)]
        dim: u32,
        /// Write the full table to this file; stdout then carries a summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CoeffsCommand {
    /// Exact membership of a coefficient in Msm or Mm<d>.
    Check {
        #[arg(long)]
        alpha: String,
        /// `Msm` or `Mm<d>` (e.g. `Mm2`).
        #[arg(long, default_value = "Msm")]
        set: String,
    },
    /// Different coefficient (m-1)/m + sum b_j n_j / m.
    Different {
        /// Local index m along the divisor.
        #[arg(long)]
        m: u64,
        /// Comma-separated `b:n` terms, e.g. `2/3:1,1/2:2`.
        #[arg(long)]
        terms: Option<String>,
        /// Also check membership of the result in `Msm` or `Mm<d>`.
        #[arg(long)]
        set: Option<String>,
    },
}

#[derive(Subcommand)]
enum DualgraphCommand {
    /// Negative definiteness, discrepancies and klt/lc flags.
    Analyze { file: PathBuf },
    /// DuVal classification with branch collection and complement index.
    Duval { file: PathBuf },
}

#[derive(Subcommand)]
enum LctCommand {
    /// sigma(alpha), its breakpoints and alpha0 for a threshold table.
    Table {
        file: PathBuf,
        /// Also evaluate sigma and the active rows at this parameter.
        #[arg(long)]
        alpha: Option<String>,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// List the named fixtures and their file paths.
    List,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<complements::Error> for Failure {
    fn from(e: complements::Error) -> Self {
        Failure::new(4, e.to_string())
    }
}

type CmdOutput = Result<(Value, Vec<String>), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((payload, diagnostics)) => {
            match cli.format {
                Format::Json => {
                    let envelope = json!({
                        "status": "ok",
                        "payload": payload,
                        "diagnostics": diagnostics,
                    });
                    println!("{}", serde_json::to_string_pretty(&envelope).expect("valid JSON"));
                }
                Format::Table => {
                    print!("{}", output::render(&payload));
                    for d in diagnostics {
                        println!("note: {d}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let envelope = json!({
                "status": "error",
                "error": f.message,
                "diagnostics": [],
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("valid JSON"));
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdOutput {
    match command {
        Command::Curve(args) => run_curve(args),
        Command::Arrangement(args) => run_arrangement(args),
        Command::Except { command } => match command {
            ExceptCommand::Enumerate { dim, out } => run_enumerate(dim, out),
        },
        Command::Coeffs { command } => match command {
            CoeffsCommand::Check { alpha, set } => run_coeffs_check(&alpha, &set),
            CoeffsCommand::Different { m, terms, set } => {
                run_coeffs_different(m, terms.as_deref(), set.as_deref())
            }
        },
        Command::Dualgraph { command } => match command {
            DualgraphCommand::Analyze { file } => run_graph_analyze(&file),
            DualgraphCommand::Duval { file } => run_graph_duval(&file),
        },
        Command::Lct { command } => match command {
            LctCommand::Table { file, alpha } => run_lct_table(&file, alpha.as_deref()),
        },
        Command::Fixtures { command } => match command {
            FixturesCommand::List => run_fixtures_list(),
        },
    }
}

fn search_cap(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::new(2, format!("{CAP_ENV} must be a positive integer, got {text:?}"))),
        Err(_) => Ok(DEFAULT_SEARCH_CAP),
    }
}

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    text.parse()
        .map_err(|_| Failure::new(2, format!("cannot parse rational {text:?}")))
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Failure::new(2, format!("cannot parse integer {part:?}")))
        })
        .collect()
}

fn parse_rational_list(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',').map(|part| parse_rational(part.trim())).collect()
}

/// `Msm` or `Mm<d>` resolved against the default registry.
fn parse_set(name: &str, registry: &ComplementRegistry) -> Result<CoefficientSet, Failure> {
    if name.eq_ignore_ascii_case("Msm") {
        return Ok(CoefficientSet::Msm);
    }
    if let Some(dim) = name.strip_prefix("Mm").and_then(|d| d.parse::<u32>().ok()) {
        return Ok(registry.mmd(dim)?);
    }
    Err(Failure::new(
        2,
        format!("unknown coefficient set {name:?}; use Msm or Mm<d>"),
    ))
}

/// Reads a file and rejects malformed JSON with the byte offset of the
/// first error.
fn read_json_file(path: &PathBuf) -> Result<String, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))?;
    if let Err(e) = serde_json::from_str::<Value>(&text) {
        let offset = byte_offset(&text, e.line(), e.column());
        return Err(Failure::new(
            3,
            format!("parse error at byte {offset} of {}: {e}", path.display()),
        ));
    }
    Ok(text)
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (i, l) in text.split('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1);
        }
        offset += l.len() + 1;
    }
    text.len()
}

fn report_json(report: &complements::curve::ComplementReport) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn run_curve(args: CurveArgs) -> CmdOutput {
    let cap = search_cap(args.cap)?;
    let pair = match (&args.points, &args.boundary) {
        (Some(points), None) => CurvePair::from_collection(&parse_u64_list(points)?)?,
        (None, Some(path)) => {
            let text = read_json_file(path)?;
            let boundary: Boundary = serde_json::from_str(&text)
                .map_err(|e| Failure::new(4, format!("invalid boundary: {e}")))?;
            CurvePair::new(boundary)?
        }
        _ => return Err(Failure::new(2, "give exactly one of --points or --boundary")),
    };
    let report = pair.compl(cap)?;
    let mut payload = report_json(&report);
    payload["exceptional"] = json!(pair.is_exceptional());
    Ok((payload, Vec::new()))
}

fn run_arrangement(args: ArrangementArgs) -> CmdOutput {
    let cap = search_cap(args.cap)?;
    let pair = match (&args.coeffs, &args.boundary) {
        (Some(coeffs), None) => {
            let dim = args
                .dim
                .ok_or_else(|| Failure::new(2, "--dim is required with --coeffs"))?;
            let coeffs = parse_rational_list(coeffs)?;
            let boundary = Boundary::new(
                coeffs
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| (format!("H{}", i + 1), c)),
            )?;
            ArrangementPair::new(dim, boundary)?
        }
        (None, Some(path)) => ArrangementPair::from_json(&read_json_file(path)?)?,
        _ => return Err(Failure::new(2, "give exactly one of --coeffs or --boundary")),
    };
    let report = pair.compl(cap)?;
    let mut payload = report_json(&report);
    payload["dim"] = json!(pair.dim());
    let mut diagnostics = Vec::new();
    if let Ok(exceptional) = pair.candidate_exceptional() {
        payload["candidate_exceptional"] = json!(exceptional);
        diagnostics.push(NEF_CONVENTION_NOTE.to_string());
    }
    Ok((payload, diagnostics))
}

fn run_enumerate(dim: u32, out: Option<PathBuf>) -> CmdOutput {
    let table = enumerate_candidate_exceptional(dim)?;
    let diagnostics = vec![NEF_CONVENTION_NOTE.to_string()];
    let mut payload = json!({
        "dim": table.dim,
        "count": table.collections.len(),
        "const": table.const_bound,
    });
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&table).expect("tables serialize");
            fs::write(&path, text + "\n")
                .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display())))?;
            payload["out"] = json!(path.display().to_string());
        }
        None => {
            payload["collections"] = json!(table.collections);
        }
    }
    Ok((payload, diagnostics))
}

fn run_coeffs_check(alpha: &str, set_name: &str) -> CmdOutput {
    let registry = ComplementRegistry::default();
    let alpha = parse_rational(alpha)?;
    let set = parse_set(set_name, &registry)?;
    let member = set.is_member(&alpha)?;
    Ok((
        json!({
            "alpha": alpha.to_string(),
            "set": set.to_string(),
            "member": member,
        }),
        Vec::new(),
    ))
}

fn run_coeffs_different(m: u64, terms: Option<&str>, set_name: Option<&str>) -> CmdOutput {
    let mut parsed = Vec::new();
    if let Some(text) = terms {
        for part in text.split(',') {
            let part = part.trim();
            let (b, n) = part
                .split_once(':')
                .ok_or_else(|| Failure::new(2, format!("term {part:?} must look like b:n")))?;
            let b = parse_rational(b)?;
            let n: u64 = n
                .trim()
                .parse()
                .map_err(|_| Failure::new(2, format!("multiplicity {n:?} must be an integer")))?;
            parsed.push((b, n));
        }
    }
    let input = DifferentInput::new(m, parsed)?;
    let mut diagnostics = Vec::new();
    if let Some(warning) = input.hypothesis_warning() {
        diagnostics.push(warning);
    }
    let alpha = input.different_coefficient()?;
    let mut payload = json!({ "coefficient": alpha.to_string() });
    if let Some(name) = set_name {
        let registry = ComplementRegistry::default();
        let set = parse_set(name, &registry)?;
        payload["set"] = json!(set.to_string());
        payload["member"] = json!(input.closure_check(&set)?);
    }
    Ok((payload, diagnostics))
}

fn run_graph_analyze(path: &PathBuf) -> CmdOutput {
    let (graph, center) = DualGraph::from_json(&read_json_file(path)?)?;
    let mut diagnostics = Vec::new();
    let negative_definite = graph.is_negative_definite();
    let mut payload = json!({
        "vertices": graph.len(),
        "negative_definite": negative_definite,
        "discrepancies": Value::Null,
        "klt": Value::Null,
        "lc": Value::Null,
        "duval": Value::Null,
    });
    if negative_definite {
        let disc = graph.discrepancies()?;
        payload["klt"] = json!(disc.is_klt());
        payload["lc"] = json!(disc.is_lc());
        payload["duval"] = json!(disc.all_zero());
        payload["discrepancies"] = serde_json::to_value(&disc).expect("rationals serialize");
    } else {
        diagnostics.push(
            "intersection matrix is not negative definite; discrepancies are undefined".into(),
        );
    }
    if let Some(center) = center {
        match graph.central_branch_collection(&center) {
            Ok(collection) => {
                payload["center"] = json!(center);
                payload["branch_collection"] = json!(collection);
            }
            Err(e) => diagnostics.push(format!("branch collection at {center:?} unavailable: {e}")),
        }
    }
    Ok((payload, diagnostics))
}

fn run_graph_duval(path: &PathBuf) -> CmdOutput {
    let (graph, _) = DualGraph::from_json(&read_json_file(path)?)?;
    let classification = graph.classify_exceptional_duval()?;
    Ok((
        serde_json::to_value(&classification).expect("classifications serialize"),
        Vec::new(),
    ))
}

fn run_lct_table(path: &PathBuf, alpha: Option<&str>) -> CmdOutput {
    let problem = ThresholdProblem::from_json(&read_json_file(path)?)?;
    let sigma = problem.sigma()?;
    let alpha0 = problem.alpha0()?;
    let breakpoints: Vec<String> = sigma.breakpoints().iter().map(|b| b.to_string()).collect();
    let mut payload = json!({
        "sigma": serde_json::to_value(&sigma).expect("piecewise-linear serializes"),
        "breakpoints": breakpoints,
        "alpha0": alpha0.to_string(),
    });
    if let Some(alpha) = alpha {
        let alpha = parse_rational(alpha)?;
        let value = sigma.eval(&alpha)?;
        let active = problem.active_rows(&alpha)?;
        payload["at"] = json!({
            "alpha": alpha.to_string(),
            "value": value.to_string(),
            "active": active,
        });
    }
    Ok((payload, Vec::new()))
}

fn run_fixtures_list() -> CmdOutput {
    let fixtures: Vec<Value> = fixtures::all()
        .iter()
        .map(|f| serde_json::to_value(f).expect("fixtures serialize"))
        .collect();
    Ok((json!({ "fixtures": fixtures }), Vec::new()))
}
