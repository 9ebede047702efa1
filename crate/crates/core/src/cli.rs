//! The `waci` command line: JSON algebra or matrix files in, JSON reports out.
//!
//! ```text
//! waci check|signature|degree|gram|integrality|smoothable <algebra.json>
//! waci qform <matrix.json>
//! waci family A|B <c> [--out fixture.json] [--verify]
//! ```
//!
//! Exit status is 0 on success, 2 for invalid input or a rejected algebra and
//! 1 for internal failures. `WACI_SEARCH_HEIGHT` bounds the sign-diagonal
//! basis search.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::families::{self, Family, FamilySpec};
use crate::matrix::QMatrix;
use crate::poly::VarSpec;
use crate::qform::{self, IntegralityVerdict, WitnessSearch};
use crate::quotient::{InnerProductSpace, Orientation, QuotientRing};
use crate::smooth::{self, SmoothVerdict};

pub const SEARCH_HEIGHT_ENV: &str = "WACI_SEARCH_HEIGHT";

/// Algebra file: generators with weights, relations, and optional
/// orientation scalar and middle-degree basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraInput {
    pub variables: Vec<VarSpec>,
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle_basis: Option<Vec<String>>,
}

impl AlgebraInput {
    pub fn build(&self) -> Result<QuotientRing> {
        QuotientRing::build_waci(self.variables.clone(), &self.relations)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInput {
    pub gram: Vec<Vec<String>>,
}

#[derive(Debug, Parser)]
#[command(name = "waci", version, about = "Poincaré duality, Eisenbud-Levine degree and smoothing verdicts for weighted artinian complete intersections")]
pub struct Cli {
    /// Human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormArgs {
    /// Algebra JSON file (`-` for stdin).
    pub input: PathBuf,
    /// Orientation scalar relative to the top standard monomial.
    #[arg(long, allow_hyphen_values = true)]
    pub orientation: Option<String>,
    /// Comma-separated basis of the middle degree.
    #[arg(long, value_delimiter = ',')]
    pub middle_basis: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the algebra; Hilbert series, formal dimension, duality.
    Check { input: PathBuf },
    /// Signature of the middle form.
    Signature(FormArgs),
    /// Eisenbud-Levine degree.
    Degree { input: PathBuf },
    /// Gram matrix of the middle form, or of the pairing in degree `--degree`.
    Gram {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Integrality over all orientations.
    Integrality(FormArgs),
    /// Smoothability verdict with witness.
    Smoothable { input: PathBuf },
    /// Invariants of a standalone Gram matrix.
    Qform { input: PathBuf },
    /// Emit a member of family A or B with its predicted invariants.
    Family {
        family: Family,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Write the algebra fixture here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Rebuild the algebra and check it against the prediction.
        #[arg(long)]
        verify: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Signature(_) => "signature",
            Command::Degree { .. } => "degree",
            Command::Gram { .. } => "gram",
            Command::Integrality(_) => "integrality",
            Command::Smoothable { .. } => "smoothable",
            Command::Qform { .. } => "qform",
            Command::Family { .. } => "family",
        }
    }
}

/// Everything a command produces besides the envelope.
struct Outcome {
    result: Value,
    diagnostics: Map<String, Value>,
    /// Nonzero when the computation ran but a self-check failed.
    exit: i32,
}

impl Outcome {
    fn ok(result: Value) -> Outcome {
        Outcome { result, diagnostics: Map::new(), exit: 0 }
    }
}

pub fn search_from_env() -> Result<WitnessSearch> {
    let mut search = WitnessSearch::default();
    if let Ok(v) = std::env::var(SEARCH_HEIGHT_ENV) {
        search.height = v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{SEARCH_HEIGHT_ENV}={v} is not a nonnegative integer")))?;
    }
    Ok(search)
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let command = cli.command.name();
    let start = Instant::now();
    let outcome = read_input(&cli.command, stdin).and_then(|bytes| {
        let hash = hex::encode(Sha256::digest(&bytes));
        dispatch(&cli.command, &bytes).map(|o| (hash, o))
    });
    match outcome {
        Ok((hash, mut o)) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            o.diagnostics.insert("timings_ms".into(), json!({ "total": (elapsed * 1000.0).round() / 1000.0 }));
            let report = json!({
                "command": command,
                "input_hash": hash,
                "result": o.result,
                "diagnostics": Value::Object(o.diagnostics),
            });
            let text = if cli.pretty { human(&report) } else { to_json(&report) };
            let _ = writeln!(out, "{text}");
            o.exit
        }
        Err(e) => {
            let report = json!({
                "command": command,
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            let _ = writeln!(out, "{}", to_json(&report));
            let _ = writeln!(err, "error: {e}");
            if e.is_invalid_input() {
                2
            } else {
                1
            }
        }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable report")
}

fn read_input(command: &Command, stdin: &mut dyn Read) -> Result<Vec<u8>> {
    let path = match command {
        Command::Check { input }
        | Command::Degree { input }
        | Command::Smoothable { input }
        | Command::Qform { input }
        | Command::Signature(FormArgs { input, .. })
        | Command::Integrality(FormArgs { input, .. })
        | Command::Gram { form: FormArgs { input, .. }, .. } => input,
        Command::Family { family, c, .. } => return Ok(format!("family {family} {c}").into_bytes()),
    };
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        stdin.read_to_end(&mut bytes).map_err(|e| Error::Input(format!("stdin: {e}")))?;
    } else {
        bytes = std::fs::read(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(bytes)
}

fn parse_json<T: for<'de> Deserialize<'de>>(bytes: &[u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|e| Error::Input(format!("malformed JSON: {e}")))
}

fn dispatch(command: &Command, bytes: &[u8]) -> Result<Outcome> {
    match command {
        Command::Check { .. } => cmd_check(&parse_json(bytes)?),
        Command::Signature(args) => cmd_signature(&with_flags(parse_json(bytes)?, args)),
        Command::Degree { .. } => cmd_degree(&parse_json(bytes)?),
        Command::Gram { form, degree } => cmd_gram(&with_flags(parse_json(bytes)?, form), *degree),
        Command::Integrality(args) => cmd_integrality(&with_flags(parse_json(bytes)?, args)),
        Command::Smoothable { .. } => cmd_smoothable(&parse_json(bytes)?, search_from_env()?),
        Command::Qform { .. } => cmd_qform(&parse_json(bytes)?, search_from_env()?),
        Command::Family { family, c, out, verify } => cmd_family(*family, c, out.as_ref(), *verify),
    }
}

fn with_flags(mut input: AlgebraInput, args: &FormArgs) -> AlgebraInput {
    if let Some(o) = &args.orientation {
        input.orientation = Some(o.clone());
    }
    if let Some(b) = &args.middle_basis {
        input.middle_basis = Some(b.iter().map(|s| s.trim().to_string()).collect());
    }
    input
}

fn rat_str(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn matrix_json(m: &QMatrix) -> Value {
    json!(m.to_str_rows())
}

/// The orientation named by the input, else the Eisenbud–Levine one.
fn orientation(ring: &QuotientRing, input: &AlgebraInput) -> Result<(Orientation, &'static str)> {
    match &input.orientation {
        Some(text) => Ok((Orientation::new(parse_rational(text)?)?, "input")),
        None => Ok((ring.el_orientation()?, "eisenbud-levine")),
    }
}

fn middle_space(ring: &QuotientRing, input: &AlgebraInput) -> Result<(InnerProductSpace, &'static str)> {
    let (omega, source) = orientation(ring, input)?;
    let space = match &input.middle_basis {
        Some(texts) => ring.middle_form_with_texts(&omega, texts)?,
        None => ring.middle_form(&omega, None)?,
    };
    Ok((space, source))
}

fn orientation_json(ring: &QuotientRing, space: &InnerProductSpace, source: &str) -> Value {
    json!({
        "scalar": rat_str(space.orientation().scalar()),
        "top_monomial": ring.top_monomial().format(ring.ring()),
        "source": source,
    })
}

pub fn cmd_check_value(input: &AlgebraInput) -> Result<Value> {
    Ok(cmd_check(input)?.result)
}

fn cmd_check(input: &AlgebraInput) -> Result<Outcome> {
    let ring = input.build()?;
    let omega = ring.el_orientation()?;
    let duality = ring.duality_verified(&omega);
    let standard: Map<String, Value> = (0..=ring.formal_dimension())
        .filter(|d| !ring.basis_in_degree(*d).is_empty())
        .map(|d| {
            let monos: Vec<String> = ring.basis_in_degree(d).iter().map(|m| m.format(ring.ring())).collect();
            (d.to_string(), json!(monos))
        })
        .collect();
    let result = json!({
        "formal_dimension": ring.formal_dimension(),
        "hilbert_series": ring.poincare_polynomial(),
        "dimension": ring.dimension(),
        "middle_rank": ring.middle_rank(),
        "relation_degrees": ring.relation_degrees(),
        "groebner_basis": ring.groebner_basis().generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "standard_monomials": standard,
        "top_monomial": ring.top_monomial().format(ring.ring()),
        "duality_verified": duality,
    });
    Ok(Outcome { exit: if duality { 0 } else { 1 }, ..Outcome::ok(result) })
}

fn cmd_signature(input: &AlgebraInput) -> Result<Outcome> {
    let ring = input.build()?;
    let (space, source) = middle_space(&ring, input)?;
    Ok(Outcome::ok(json!({
        "signature": space.signature(),
        "rank": space.rank(),
        "orientation": orientation_json(&ring, &space, source),
        "basis": space.basis_labels(),
    })))
}

fn cmd_degree(input: &AlgebraInput) -> Result<Outcome> {
    let ring = input.build()?;
    let omega = ring.el_orientation()?;
    let degree = ring.el_degree()?;
    let mut result = json!({
        "degree": degree,
        "el_orientation": {
            "scalar": rat_str(omega.scalar()),
            "top_monomial": ring.top_monomial().format(ring.ring()),
        },
        "formal_dimension": ring.formal_dimension(),
    });
    if ring.formal_dimension() % 4 == 0 {
        let middle = ring.middle_form(&omega, None)?.signature();
        result["middle_signature"] = json!(middle);
        if middle != degree {
            return Err(Error::Internal(format!("full-form signature {degree} differs from middle signature {middle}")));
        }
    }
    Ok(Outcome::ok(result))
}

fn cmd_gram(input: &AlgebraInput, degree: Option<u32>) -> Result<Outcome> {
    let ring = input.build()?;
    match degree {
        Some(j) if j * 2 != ring.formal_dimension() || input.middle_basis.is_none() => {
            let (omega, source) = orientation(&ring, input)?;
            let g = ring.pairing_matrix(j, &omega)?;
            let label = |d: u32| -> Vec<String> { ring.basis_in_degree(d).iter().map(|m| m.format(ring.ring())).collect() };
            Ok(Outcome::ok(json!({
                "degree": j,
                "gram": matrix_json(&g),
                "row_basis": label(j),
                "column_basis": label(ring.formal_dimension() - j),
                "orientation": {
                    "scalar": rat_str(omega.scalar()),
                    "top_monomial": ring.top_monomial().format(ring.ring()),
                    "source": source,
                },
            })))
        }
        _ => {
            let (space, source) = middle_space(&ring, input)?;
            Ok(Outcome::ok(json!({
                "degree": ring.formal_dimension() / 2,
                "gram": matrix_json(space.gram()),
                "basis": space.basis_labels(),
                "orientation": orientation_json(&ring, &space, source),
            })))
        }
    }
}

pub fn integrality_json(v: &IntegralityVerdict) -> Value {
    json!({
        "passes": v.passes,
        "case_tag": v.case_tag,
        "witness_lambda": v.witness_lambda.as_ref().map(rat_str),
        "failing_prime": v.failing_prime.as_ref().map(|p| p.to_string()),
        "discriminant_ok": v.discriminant_ok,
        "bad_primes": v.bad_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

fn primes_examined(v: &IntegralityVerdict) -> Value {
    json!(v.primes_examined.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn cmd_integrality(input: &AlgebraInput) -> Result<Outcome> {
    let ring = input.build()?;
    let (space, source) = middle_space(&ring, input)?;
    let v = qform::integrality_over_orientations(&space)?;
    let mut result = integrality_json(&v);
    result["rank"] = json!(space.rank());
    result["signature"] = json!(space.signature());
    result["orientation"] = orientation_json(&ring, &space, source);
    let mut o = Outcome::ok(result);
    o.diagnostics.insert("primes_examined".into(), primes_examined(&v));
    Ok(o)
}

pub fn verdict_json(v: &SmoothVerdict) -> Value {
    json!({
        "decision": v.decision,
        "reason": v.reason,
        "formal_dimension": v.formal_dimension,
        "signature": v.signature,
        "orientation_lambda": v.orientation_lambda.as_ref().map(rat_str),
        "witness": v.witness,
        "obstruction": v.obstruction.as_ref().map(integrality_json),
    })
}

fn cmd_smoothable(input: &AlgebraInput, search: WitnessSearch) -> Result<Outcome> {
    let ring = input.build()?;
    let v = smooth::smoothable(&ring, search)?;
    let mut o = Outcome::ok(verdict_json(&v));
    if let Some(obs) = &v.obstruction {
        o.diagnostics.insert("primes_examined".into(), primes_examined(obs));
    }
    o.diagnostics.insert("search_height".into(), json!(search.height));
    Ok(o)
}

pub fn qform_value(gram: &QMatrix, search: WitnessSearch) -> Result<Value> {
    let inv = qform::invariants(gram)?;
    let in_witt = qform::in_witt_z(gram)?;
    let space = InnerProductSpace::from_gram(gram.clone())?;
    let verdict = qform::integrality_over_orientations(&space)?;
    let witness = if in_witt {
        qform::sign_diagonal_witness(gram, search)?.map(|t| matrix_json(&t))
    } else {
        None
    };
    let local: Map<String, Value> = inv.local.iter().map(|l| (l.place.clone(), json!(l.value))).collect();
    Ok(json!({
        "rank": inv.rank,
        "signature": inv.signature,
        "discriminant": inv.discriminant,
        "local_invariants": local,
        "in_witt_z": in_witt,
        "integrality": integrality_json(&verdict),
        "sign_diagonal_witness": witness,
    }))
}

fn cmd_qform(input: &MatrixInput, search: WitnessSearch) -> Result<Outcome> {
    let gram = QMatrix::from_str_rows(&input.gram)?;
    if !gram.is_square() {
        return Err(Error::Shape(format!("{}x{} Gram matrix", gram.rows(), gram.cols())));
    }
    let result = qform_value(&gram, search)?;
    let mut o = Outcome::ok(result);
    let verdict = qform::integrality_over_orientations(&InnerProductSpace::from_gram(gram)?)?;
    o.diagnostics.insert("primes_examined".into(), primes_examined(&verdict));
    o.diagnostics.insert("search_height".into(), json!(search.height));
    o.diagnostics.insert("local_at_2_and_inf_are_informational".into(), json!(true));
    Ok(o)
}

/// The algebra file for a family member, orientation and basis included.
pub fn family_fixture(spec: &FamilySpec) -> Result<AlgebraInput> {
    let ring = spec.build()?;
    let omega = ring.orientation_of(&ring.parse(&spec.orientation_element)?)?;
    Ok(AlgebraInput {
        variables: spec.variables.clone(),
        relations: spec.relations.clone(),
        orientation: Some(format_rational(omega.scalar())),
        middle_basis: Some(spec.middle_basis.clone()),
    })
}

fn cmd_family(family: Family, c: &str, out: Option<&PathBuf>, verify: bool) -> Result<Outcome> {
    let c = parse_rational(c)?;
    let spec = families::family(family, &c)?;
    let fixture = family_fixture(&spec)?;
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&fixture).expect("serializable fixture") + "\n";
        std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    let oracle = &spec.oracle;
    let mut result = json!({
        "family": family,
        "c": rat_str(&c),
        "fixture": fixture,
        "oracle": {
            "signature": oracle.signature,
            "signature_magnitude": oracle.signature.unsigned_abs(),
            "smoothable": oracle.smoothable,
            "orientation_element": spec.orientation_element,
            "reference_matrix": matrix_json(&oracle.reference_matrix),
            "reference_diagonal": oracle.reference_diagonal.as_ref().map(|d| d.iter().map(format_rational).collect::<Vec<_>>()),
        },
    });
    let mut exit = 0;
    if verify {
        let report = families::verify_family(&spec)?;
        if !report.all_passed() {
            exit = 1;
        }
        result["verification"] = serde_json::to_value(&report).expect("serializable report");
    }
    Ok(Outcome { exit, ..Outcome::ok(result) })
}

/// Indented `key: value` rendering of a report.
fn human(report: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, v) in map {
                    match v {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(v, indent + 1, out);
                        }
                        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            for item in items {
                                out.push_str(&format!("{pad}  -\n"));
                                walk(item, indent + 2, out);
                            }
                        }
                        other => out.push_str(&format!("{pad}{k}: {}\n", scalar(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Null => "-".into(),
            Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk(report, 0, &mut out);
    out.trim_end().to_string()
}
