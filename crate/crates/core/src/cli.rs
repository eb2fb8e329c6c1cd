//! Batch jobs behind the `toric-monoids` binary.
//!
//! Each job reads one JSON document, runs one computation and renders a
//! deterministic report. Exit codes: 0 success, 1 malformed input, 2 failed
//! validation or verification, 3 enumeration not proved complete.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphisms::{aut_report, DEFAULT_OUTER_BOUND};
use crate::cones::{ConeSpec, Side};
use crate::demazure::{enumerate_demazure_roots, is_demazure_root, make_compatible_collection, CollectionSpec};
use crate::error::{Error, Result};
use crate::reductive::{reductive_aut_report, validate_vinberg_cone, ReductiveSpec, DEFAULT_PHI_BOUND, DEFAULT_WEIGHT_BOX};
use crate::root_monoid::{MonoidSpec, RootMonoid, DEFAULT_VERIFY_DEGREE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

/// Default box half-width for `roots`.
pub const DEFAULT_ROOT_BOUND: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    /// Demazure roots of a cone in a box.
    Roots,
    /// Itemized checks of a root monoid bundle or a reductive datum and cone.
    Validate,
    /// Adapted basis, Hilbert basis and unit group of a root monoid.
    Build,
    /// Bialgebra axioms of the comultiplication.
    Verify,
    /// Automorphism group of a root monoid.
    Aut,
    /// Automorphism group of a reductive monoid.
    ReductiveAut,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Roots => "roots",
            Command::Validate => "validate",
            Command::Build => "build",
            Command::Verify => "verify",
            Command::Aut => "aut",
            Command::ReductiveAut => "reductive-aut",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: PathBuf,
    /// Box or search bound; each command has its own default.
    pub bound: Option<i64>,
    /// Total degree of generator products checked by `verify`.
    pub degree_bound: Option<i64>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: String,
}

fn malformed(msg: impl Into<String>) -> (i32, Value) {
    let msg = msg.into();
    (EXIT_MALFORMED, json!({"error": {"kind": "input", "message": msg}}))
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Input(_)
        | Error::RankMismatch { .. }
        | Error::RayIndex { .. }
        | Error::ZeroVector
        | Error::MissingValue(_)
        | Error::Overflow(_) => EXIT_MALFORMED,
        _ => EXIT_FAILED,
    }
}

fn error_value(e: &Error) -> (i32, Value) {
    (exit_for(e), json!({"error": {"kind": e.kind(), "message": e.to_string()}}))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// Runs one job and renders its report.
pub fn run(spec: &JobSpec) -> Outcome {
    let (exit_code, value) = dispatch(spec);
    let report = match spec.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(&value),
    };
    Outcome { exit_code, report }
}

fn positive(name: &str, v: Option<i64>, default: i64) -> std::result::Result<i64, (i32, Value)> {
    match v {
        None => Ok(default),
        Some(b) if b >= 1 => Ok(b),
        Some(b) => Err(malformed(format!("--{name} must be positive, got {b}"))),
    }
}

fn dispatch(spec: &JobSpec) -> (i32, Value) {
    let text = match std::fs::read_to_string(&spec.input) {
        Ok(t) => t,
        Err(e) => return malformed(format!("cannot read {}: {e}", spec.input.display())),
    };
    let input: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return malformed(format!("invalid JSON: {e}")),
    };
    let default_bound = match spec.command {
        Command::Roots => DEFAULT_ROOT_BOUND,
        Command::Validate => DEFAULT_WEIGHT_BOX,
        Command::Aut => DEFAULT_OUTER_BOUND,
        Command::ReductiveAut => DEFAULT_PHI_BOUND,
        _ => 1,
    };
    let bound = match positive("bound", spec.bound, default_bound) {
        Ok(b) => b,
        Err(e) => return e,
    };
    let degree = match positive("degree-bound", spec.degree_bound, DEFAULT_VERIFY_DEGREE as i64) {
        Ok(d) => d as usize,
        Err(e) => return e,
    };
    let result = match spec.command {
        Command::Roots => roots(&input, bound),
        Command::Validate if input.get("datum").is_some() => validate_reductive(&input, bound),
        Command::Validate => validate_monoid(&input),
        Command::Build => build(&input),
        Command::Verify => verify(&input, degree),
        Command::Aut => aut(&input, bound),
        Command::ReductiveAut => reductive_aut(&input, bound),
    };
    match result {
        Ok((code, v)) => (code, json!({"command": spec.command.name(), "result": v})),
        Err(e) => error_value(&e),
    }
}

fn parse<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("input does not match the schema: {e}")))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| Error::Input(format!("missing field {name:?}")))
}

fn monoid(input: &Value) -> Result<RootMonoid> {
    let spec: MonoidSpec = parse(input)?;
    if input.get("unchecked").and_then(Value::as_bool) == Some(true) {
        spec.build_unchecked()
    } else {
        spec.build()
    }
}

fn roots(input: &Value, bound: i64) -> Result<(i32, Value)> {
    let spec: ConeSpec = parse(field(input, "cone")?)?;
    let sigma = spec.into_cone(Side::N)?;
    let families = enumerate_demazure_roots(&sigma, bound)?;
    Ok((
        EXIT_OK,
        json!({"rays": to_value(&sigma.extreme_rays()?), "bound": bound, "families": to_value(&families)}),
    ))
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: &str, r: std::result::Result<String, String>) -> Check {
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        name: name.into(),
        pass,
        detail,
    }
}

fn validate_monoid(input: &Value) -> Result<(i32, Value)> {
    let cone: ConeSpec = parse(field(input, "cone")?)?;
    let spec: CollectionSpec = parse(field(input, "collection")?)?;
    let sigma = cone.into_cone(Side::N)?;
    let mut checks = vec![];
    let convex = sigma.is_strongly_convex();
    checks.push(check(
        "strongly_convex",
        if convex { Ok("σ contains no line".into()) } else { Err("σ contains a line".into()) },
    ));
    if convex {
        let face = spec.face.resolve(&sigma)?;
        let regular = sigma.is_regular_face(&face);
        checks.push(check(
            "face_regular",
            if regular {
                Ok(format!("rays {:?} are part of a lattice basis", face.ray_indices))
            } else {
                Err(format!("rays {:?} are not part of a lattice basis", face.ray_indices))
            },
        ));
        if spec.e1.len() != face.ray_indices.len() || spec.e2.len() != face.ray_indices.len() {
            return Err(Error::Input(format!(
                "the face has {} rays; e1 and e2 must have that many roots",
                face.ray_indices.len()
            )));
        }
        for (name, es) in [("e1", &spec.e1), ("e2", &spec.e2)] {
            for (r, (e, &i)) in es.iter().zip(&face.ray_indices).enumerate() {
                let ok = is_demazure_root(&sigma, e, i)?;
                checks.push(check(
                    &format!("{name}[{r}]_is_root"),
                    if ok { Ok(format!("{e} is a Demazure root of ray {i}")) } else { Err(format!("{e} is not a Demazure root of ray {i}")) },
                ));
            }
        }
        if regular {
            match make_compatible_collection(&sigma, &face, spec.e1.clone(), spec.e2.clone()) {
                Ok(c) => {
                    checks.push(check("compatible", Ok("pairings with the face rays are Kronecker and χ_r ⊥ τ".into())));
                    let active = c.is_active();
                    let chars: Vec<String> = c.chars.iter().map(|x| x.to_string()).collect();
                    checks.push(check(
                        "active",
                        if active {
                            Ok(format!("characters {} are linearly independent", chars.join(", ")))
                        } else {
                            Err(format!("characters {} are linearly dependent", chars.join(", ")))
                        },
                    ));
                    checks.push(check(
                        "adapted_basis",
                        match RootMonoid::build(sigma.clone(), c) {
                            Ok(_) => Ok("-e_1 and q_{k+1..n} form a basis of M".into()),
                            Err(e) => Err(e.to_string()),
                        },
                    ));
                }
                Err(e) => checks.push(check("compatible", Err(e.to_string()))),
            }
        }
    }
    let valid = checks.iter().all(|c| c.pass);
    let code = if valid { EXIT_OK } else { EXIT_FAILED };
    Ok((code, json!({"valid": valid, "conditions": to_value(&checks)})))
}

fn validate_reductive(input: &Value, bound: i64) -> Result<(i32, Value)> {
    let spec: ReductiveSpec = parse(input)?;
    let rep = validate_vinberg_cone(&spec.datum, &spec.cone, bound)?;
    let code = if rep.valid { EXIT_OK } else { EXIT_FAILED };
    let mut v = to_value(&rep);
    v["cartan_matrix"] = to_value(&spec.datum.cartan_matrix()?);
    Ok((code, v))
}

fn build(input: &Value) -> Result<(i32, Value)> {
    let x = monoid(input)?;
    let g = x.unit_group()?;
    Ok((
        EXIT_OK,
        json!({
            "rank": x.rank(),
            "k": x.k(),
            "rays": to_value(&x.rays()),
            "face": to_value(x.tau()),
            "collection": to_value(x.collection()),
            "active": x.collection().is_active(),
            "adapted_basis": to_value(x.basis()),
            "dual_cone": to_value(&x.dual_sigma().generators()),
            "hilbert_basis": to_value(&x.hilbert_basis()),
            "unit_group": to_value(&g),
        }),
    ))
}

fn verify(input: &Value, degree: usize) -> Result<(i32, Value)> {
    let x = monoid(input)?;
    let rep = x.verify_bialgebra(degree);
    let code = if rep.all_pass() { EXIT_OK } else { EXIT_FAILED };
    Ok((code, to_value(&rep)))
}

fn aut(input: &Value, bound: i64) -> Result<(i32, Value)> {
    let x = monoid(input)?;
    let rep = aut_report(&x, bound)?;
    let code = if !rep.outer.verified || !rep.outer.restrictions_fix_characters {
        EXIT_FAILED
    } else if !rep.outer.complete {
        EXIT_INCOMPLETE
    } else {
        EXIT_OK
    };
    Ok((code, to_value(&rep)))
}

fn reductive_aut(input: &Value, bound: i64) -> Result<(i32, Value)> {
    let spec: ReductiveSpec = parse(input)?;
    let rep = reductive_aut_report(&spec.datum, &spec.cone, bound)?;
    let code = if rep.outer.complete { EXIT_OK } else { EXIT_INCOMPLETE };
    Ok((code, to_value(&rep)))
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_number_like(v: &Value) -> bool {
    is_scalar(v) && !v.is_string()
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items)
            if items
                .iter()
                .all(|i| is_number_like(i) || matches!(i, Value::Array(a) if a.iter().all(is_number_like))) =>
        {
            Some(format!(
                "[{}]",
                items.iter().map(|i| inline(i).expect("flat")).collect::<Vec<_>>().join(", ")
            ))
        }
        v if is_scalar(v) => Some(v.to_string()),
        _ => None,
    }
}

/// Indented `key: value` rendering of a JSON report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").expect("string write"),
                    None => {
                        writeln!(out, "{pad}{k}:").expect("string write");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").expect("string write"),
                    None => {
                        writeln!(out, "{pad}-").expect("string write");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        x => writeln!(out, "{pad}{}", inline(x).expect("scalar")).expect("string write"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let v = json!({"a": 1, "b": [[1, 0], [0, 1]], "c": {"d": "x", "e": [{"f": true}]}, "g": ["p, q", "r"]});
        assert_eq!(
            render_text(&v),
            "a: 1\nb: [[1, 0], [0, 1]]\nc:\n  d: x\n  e:\n    -\n      f: true\ng:\n  - p, q\n  - r\n"
        );
    }
}
