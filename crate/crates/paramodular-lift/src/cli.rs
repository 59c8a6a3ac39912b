//! Command line front end.
//!
//! Every subcommand has a text rendering (default) and a JSON rendering
//! (`--json` or `PARAMODULAR_LIFT_JSON=1`). JSON output is deterministic:
//! objects are emitted with sorted keys and no incidental whitespace.
//!
//! Exit status: 0 on success, 2 on invalid input, 3 when the computation
//! succeeded but the result is indeterminate (a level bounded only from
//! below, a lift without paramodular vectors, an undecidable case, or a
//! missing local annotation).

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};
use num::BigRational;
use serde_json::{json, Value};

use crate::archimedean::{multiplicity, HighestWeight};
use crate::endoscopy::{dim_cusp_forms_level1, endoscopic_motive, strict_endoscopic_dim};
use crate::global_lift::{global_lift_level, NewformDescriptor, TotalLevel};
use crate::local_reps::{
    conductor_gl2, FiniteLabel, GL2LocalRep, Nu, OrderHint, PadicCharacter,
};
use crate::theta_resolver::{
    local_theta_level, paramodular_member, Level, Matrix4, ResolveError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "paramodular-lift",
    about = "Paramodular levels of theta lifts from GSO(2,2) to GSp(4)",
    version
)]
struct Cli {
    /// Emit JSON instead of text (also enabled by PARAMODULAR_LIFT_JSON=1).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conductor exponent of a GL(2, Q_p) representation.
    Conductor {
        /// Representation descriptor (JSON).
        #[arg(long)]
        rep: String,
    },
    /// Case, type and paramodular level of the local lift of a pair.
    LocalLift {
        /// First representation descriptor (JSON).
        #[arg(long)]
        tau1: String,
        /// Second representation descriptor (JSON).
        #[arg(long)]
        tau2: String,
    },
    /// Global paramodular level of the lift of two elliptic newforms.
    GlobalLift {
        /// First newform: inline "weight=K,level=N" (square-free N) or a
        /// path to a JSON descriptor file.
        #[arg(long)]
        f1: String,
        /// Second newform, same formats.
        #[arg(long)]
        f2: String,
    },
    /// Strict endoscopic dimension and motive for coefficient weight (l, m).
    Endoscopic(WeightArgs),
    /// Hodge bidegrees of the coefficient system of highest weight (l, m).
    HodgeTable(WeightArgs),
    /// Multiplicity of an elliptic-pair contribution with e flipped places.
    Multiplicity {
        #[arg(long)]
        e: u32,
    },
    /// Membership of a rational 4x4 matrix in the paramodular group K(p^n).
    ParamodularCheck {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        n: u32,
        /// Matrix as a JSON 4x4 array; entries are integers or "a/b" strings.
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    l: i64,
    #[arg(long)]
    m: i64,
}

/// Parsed command output: a JSON value, its text rendering, and exit status.
struct Outcome {
    value: Value,
    text: Vec<String>,
    status: i32,
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(err: E) -> Self {
        CliError(err.to_string())
    }
}

/// Entry point shared by the binary and the tests. Prints to stdout/stderr
/// and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap handles --help/--version through this path with status 0.
            let _ = err.print();
            return if err.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let json_mode = cli.json
        || std::env::var("PARAMODULAR_LIFT_JSON").map_or(false, |v| v == "1");
    match execute(&cli.command) {
        Ok(outcome) => {
            if json_mode {
                println!("{}", outcome.value);
            } else {
                for line in &outcome.text {
                    println!("{line}");
                }
            }
            outcome.status
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INVALID
        }
    }
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Conductor { rep } => conductor_cmd(rep),
        Command::LocalLift { tau1, tau2 } => local_lift_cmd(tau1, tau2),
        Command::GlobalLift { f1, f2 } => global_lift_cmd(f1, f2),
        Command::Endoscopic(w) => endoscopic_cmd(w),
        Command::HodgeTable(w) => hodge_table_cmd(w),
        Command::Multiplicity { e } => Ok(Outcome {
            value: json!({"e": e, "multiplicity": multiplicity(*e)}),
            text: vec![format!("multiplicity(e = {e}) = {}", multiplicity(*e))],
            status: EXIT_OK,
        }),
        Command::ParamodularCheck { prime, n, matrix } => check_cmd(*prime, *n, matrix),
    }
}

// ---------------------------------------------------------------------------
// Wire format for representations and characters
// ---------------------------------------------------------------------------

#[derive(serde::Deserialize)]
struct RepDescriptor {
    kind: String,
    prime: u64,
    #[serde(default)]
    chars: Vec<CharDescriptor>,
    conductor: Option<u32>,
    label: Option<String>,
    /// For "ps": accept inducing data of a reducible induced representation.
    #[serde(default)]
    embedded: bool,
}

#[derive(serde::Deserialize)]
struct CharDescriptor {
    #[serde(default)]
    conductor: u32,
    #[serde(default)]
    nu_exp: Option<String>,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    order: Option<String>,
    #[serde(default)]
    inverted: bool,
}

fn parse_nu(s: &str) -> Result<Nu, CliError> {
    let parts: Vec<&str> = s.split('/').collect();
    match parts.as_slice() {
        [n] => Ok(Nu::from_integer(n.trim().parse::<i64>()?)),
        [n, d] => {
            let d = d.trim().parse::<i64>()?;
            if d == 0 {
                return Err(CliError("nu exponent with zero denominator".into()));
            }
            Ok(Nu::new(n.trim().parse::<i64>()?, d))
        }
        _ => Err(CliError(format!("malformed rational '{s}'"))),
    }
}

fn char_from_descriptor(prime: u64, d: &CharDescriptor) -> Result<PadicCharacter, CliError> {
    let nu = match &d.nu_exp {
        Some(s) => parse_nu(s)?,
        None => Nu::from_integer(0),
    };
    let label = d.label.as_deref().unwrap_or("TRIVIAL");
    let (finite_label, order) = match label {
        "TRIVIAL" => (FiniteLabel::Trivial, OrderHint::Trivial),
        "UNRAM_QUAD" => (FiniteLabel::UnramQuad, OrderHint::Quadratic),
        name => {
            let order = match d.order.as_deref() {
                None | Some("unknown") => OrderHint::Unknown,
                Some("quadratic") => OrderHint::Quadratic,
                Some("trivial") => {
                    return Err(CliError("a trivial character must use the TRIVIAL label".into()))
                }
                Some(other) => return Err(CliError(format!("unknown order hint '{other}'"))),
            };
            (FiniteLabel::Opaque { name: name.into(), inverted: d.inverted }, order)
        }
    };
    Ok(PadicCharacter::new(prime, nu, d.conductor, finite_label, order)?)
}

fn rep_from_json(text: &str) -> Result<GL2LocalRep, CliError> {
    let d: RepDescriptor = serde_json::from_str(text)?;
    match d.kind.as_str() {
        "ps" => {
            if d.chars.len() != 2 {
                return Err(CliError("principal series needs exactly two characters".into()));
            }
            let chi1 = char_from_descriptor(d.prime, &d.chars[0])?;
            let chi2 = char_from_descriptor(d.prime, &d.chars[1])?;
            let rep = if d.embedded {
                GL2LocalRep::principal_series_embedded(chi1, chi2)?
            } else {
                GL2LocalRep::principal_series(chi1, chi2)?
            };
            Ok(rep)
        }
        "st" => {
            if d.chars.len() != 1 {
                return Err(CliError("Steinberg twist needs exactly one character".into()));
            }
            Ok(GL2LocalRep::steinberg_twist(char_from_descriptor(d.prime, &d.chars[0])?)?)
        }
        "sc" => {
            let conductor = d
                .conductor
                .ok_or_else(|| CliError("supercuspidal needs a conductor".into()))?;
            let label = d
                .label
                .as_deref()
                .ok_or_else(|| CliError("supercuspidal needs a label".into()))?;
            Ok(GL2LocalRep::supercuspidal(d.prime, conductor, label)?)
        }
        other => Err(CliError(format!("unknown representation kind '{other}'"))),
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn conductor_cmd(rep: &str) -> Result<Outcome, CliError> {
    let rep = rep_from_json(rep)?;
    let a = conductor_gl2(&rep)?;
    Ok(Outcome {
        value: json!({"conductor": a}),
        text: vec![format!("conductor exponent: {a}")],
        status: EXIT_OK,
    })
}

fn level_json(level: &Level) -> Value {
    match level {
        Level::Exact(n) => json!({"kind": "exact", "value": n}),
        Level::LowerBound(n) => json!({"kind": "lower_bound", "value": n}),
        Level::NotParamodular => json!({"kind": "not_paramodular"}),
    }
}

fn level_text(level: &Level) -> String {
    match level {
        Level::Exact(n) => format!("exact, p^{n}"),
        Level::LowerBound(n) => format!("at least p^{n} (supercuspidal lift)"),
        Level::NotParamodular => "no paramodular vectors".into(),
    }
}

fn local_lift_cmd(tau1: &str, tau2: &str) -> Result<Outcome, CliError> {
    let tau1 = rep_from_json(tau1)?;
    let tau2 = rep_from_json(tau2)?;
    match local_theta_level(&tau1, &tau2) {
        Ok(result) => {
            let status = match result.level {
                Level::Exact(_) => EXIT_OK,
                Level::LowerBound(_) | Level::NotParamodular => EXIT_INDETERMINATE,
            };
            Ok(Outcome {
                value: json!({
                    "case": format!("{:?}", result.case),
                    "gsp4_type": format!("{:?}", result.gsp4_type),
                    "level": level_json(&result.level),
                }),
                text: vec![
                    format!("case: {:?}", result.case),
                    format!("lift type: {:?}", result.gsp4_type),
                    format!("paramodular level: {}", level_text(&result.level)),
                ],
                status,
            })
        }
        Err(err @ (ResolveError::UndecidableCase(_) | ResolveError::TwistIndeterminate(_))) => {
            Ok(Outcome {
                value: json!({"indeterminate": err.to_string()}),
                text: vec![format!("indeterminate: {err}")],
                status: EXIT_INDETERMINATE,
            })
        }
        Err(err @ ResolveError::InvalidInput(_)) => Err(err.into()),
    }
}

fn newform_from_spec(slot: &str, spec: &str) -> Result<NewformDescriptor, CliError> {
    if let Some(rest) = spec.strip_prefix("weight=") {
        // Inline form: weight=K,level=N with square-free N.
        let (weight, level) = rest
            .split_once(",level=")
            .ok_or_else(|| CliError(format!("malformed newform spec '{spec}'")))?;
        let weight: u32 = weight.trim().parse()?;
        let level: u64 = level.trim().parse()?;
        let name = format!("{slot}(weight={weight},level={level})");
        return Ok(NewformDescriptor::with_square_free_level(&name, weight, level)?);
    }
    // Otherwise a path to a JSON descriptor.
    let text = std::fs::read_to_string(spec)
        .map_err(|err| CliError(format!("cannot read '{spec}': {err}")))?;
    let form: NewformDescriptor = serde_json::from_str(&text)?;
    form.validate()?;
    Ok(form)
}

fn factors_text(factors: &BTreeMap<u64, u32>) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(p, e)| if *e == 1 { format!("{p}") } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn global_lift_cmd(f1: &str, f2: &str) -> Result<Outcome, CliError> {
    let f1 = newform_from_spec("f1", f1)?;
    let f2 = newform_from_spec("f2", f2)?;
    let report = global_lift_level(&f1, &f2)?;

    let mut text = Vec::new();
    for row in &report.primes {
        match &row.outcome {
            crate::global_lift::PrimeOutcome::Resolved { case, gsp4_type, level } => {
                text.push(format!(
                    "p = {}: case {:?}, type {:?}, level {}",
                    row.prime,
                    case,
                    gsp4_type,
                    level_text(level)
                ));
            }
            crate::global_lift::PrimeOutcome::Undecided { reason } => {
                text.push(format!("p = {}: undecided ({reason})", row.prime));
            }
        }
    }
    let status = match &report.total {
        TotalLevel::Exact { factors, value } => {
            text.push(format!("paramodular level: {} = {}", factors_text(factors), value));
            EXIT_OK
        }
        TotalLevel::Interval { lower_factors, lower_value, indeterminate } => {
            text.push(format!(
                "paramodular level: at least {} = {} ({} indeterminate prime(s))",
                factors_text(lower_factors),
                lower_value,
                indeterminate.len()
            ));
            EXIT_INDETERMINATE
        }
    };
    if let Some((l, m)) = report.coefficient_weight {
        text.push(format!("coefficient weight: (l, m) = ({l}, {m})"));
    }
    Ok(Outcome { value: serde_json::to_value(&report)?, text, status })
}

fn endoscopic_cmd(w: &WeightArgs) -> Result<Outcome, CliError> {
    let weight = HighestWeight::new(w.l, w.m)?;
    let dim = strict_endoscopic_dim(&weight);
    let motive = endoscopic_motive(&weight);
    let s_big = dim_cusp_forms_level1((w.l + w.m + 4) as u32);
    let s_small = dim_cusp_forms_level1((w.l - w.m + 2) as u32);
    let hodge: Vec<Value> = motive
        .hodge_types()
        .iter()
        .map(|(&(p, q), &mult)| json!({"p": p, "q": q, "mult": mult}))
        .collect();
    let motive_text = if s_big == 0 {
        "0".to_string()
    } else {
        format!("-{s_big} * S[{}] L^{}", w.l - w.m + 2, w.m + 1)
    };
    Ok(Outcome {
        value: json!({
            "l": w.l,
            "m": w.m,
            "sufficiently_regular": weight.sufficiently_regular(),
            "s_factors": {"k1": w.l + w.m + 4, "s_k1": s_big, "k2": w.l - w.m + 2, "s_k2": s_small},
            "strict_endoscopic_dim": dim,
            "motive": {
                "terms": motive
                    .terms
                    .iter()
                    .map(|(&(k, j), &coeff)| json!({"k": k, "j": j, "coeff": coeff}))
                    .collect::<Vec<Value>>(),
                "tate": motive
                    .tate
                    .iter()
                    .map(|(&j, &coeff)| json!({"j": j, "coeff": coeff}))
                    .collect::<Vec<Value>>(),
            },
            "hodge_types": hodge,
            "euler_number": motive.euler_number(),
        }),
        text: vec![
            format!("coefficient weight (l, m) = ({}, {})", w.l, w.m),
            format!(
                "s_{{l+m+4}} = s_{} = {s_big}, s_{{l-m+2}} = s_{} = {s_small}",
                w.l + w.m + 4,
                w.l - w.m + 2
            ),
            format!("strict endoscopic dimension: {dim}"),
            format!("endoscopic motive: {motive_text}"),
        ],
        status: EXIT_OK,
    })
}

fn hodge_table_cmd(w: &WeightArgs) -> Result<Outcome, CliError> {
    let weight = HighestWeight::new(w.l, w.m)?;
    let rows = weight.hodge_table();
    let mut text = vec![format!(
        "Hodge bidegrees for (l, m) = ({}, {}), c = {}:",
        w.l,
        w.m,
        weight.c()
    )];
    for row in &rows {
        text.push(format!("  ({}, {}): ({}, {})", row.p, row.q, row.weight.0, row.weight.1));
    }
    Ok(Outcome {
        value: json!({
            "c": weight.c(),
            "l": w.l,
            "m": w.m,
            "rows": serde_json::to_value(rows)?,
        }),
        text,
        status: EXIT_OK,
    })
}

fn parse_matrix(text: &str) -> Result<Matrix4, CliError> {
    let raw: Vec<Vec<Value>> = serde_json::from_str(text)?;
    if raw.len() != 4 || raw.iter().any(|row| row.len() != 4) {
        return Err(CliError("matrix must be 4x4".into()));
    }
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for row in &raw {
        let mut entries = Vec::new();
        for cell in row {
            let q = match cell {
                Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| CliError(format!("non-integer number {n}")))?;
                    BigRational::from_integer(i.into())
                }
                Value::String(s) => {
                    let r = parse_nu(s)?;
                    BigRational::new((*r.numer()).into(), (*r.denom()).into())
                }
                other => return Err(CliError(format!("bad matrix entry {other}"))),
            };
            entries.push(q);
        }
        out.push(entries);
    }
    Ok(core::array::from_fn(|i| core::array::from_fn(|j| out[i][j].clone())))
}

fn check_cmd(prime: u64, n: u32, matrix: &str) -> Result<Outcome, CliError> {
    if prime < 2 {
        return Err(CliError(format!("{prime} is not a prime")));
    }
    let g = parse_matrix(matrix)?;
    let member = paramodular_member(&g, prime, n);
    Ok(Outcome {
        value: json!({"member": member, "n": n, "prime": prime}),
        text: vec![format!(
            "matrix is {}a member of K(p^{n}) at p = {prime}",
            if member { "" } else { "not " }
        )],
        status: EXIT_OK,
    })
}
