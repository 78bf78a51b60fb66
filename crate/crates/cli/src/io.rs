//! JSON formats and exact number printing.
//!
//! Body and facet indices are 1-based in every serialized form.

use afx_core::criticality::CriticalityReport;
use afx_core::extremals::{Decomposition, ExtremalSpace};
use afx_core::mixedvol::{BodyCollection, MixedAreaMeasure, SupportDifference};
use afx_core::polytope::VPolytope;
use afx_core::ratgeo::{fmt_rational, lex_cmp, parse_rational, to_f64, QVector, Rational, ScaledRational};
use afx_core::stanley::{ExstReport, Poset};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {msg}")]
    Malformed { path: String, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn malformed(path: &str, msg: impl Into<String>) -> InputError {
    InputError::Malformed {
        path: path.to_string(),
        msg: msg.into(),
    }
}

/// `{"dim": n, "vertices": [["p/q", ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeJson {
    /// Canonical form: vertices sorted lexicographically.
    pub fn from_polytope(p: &VPolytope) -> Self {
        let mut verts = p.vertices().to_vec();
        verts.sort_by(|a, b| lex_cmp(a, b));
        PolytopeJson {
            dim: p.ambient_dim(),
            vertices: verts.iter().map(|v| v.iter().map(fmt_rational).collect()).collect(),
        }
    }
}

pub fn polytope_json(p: &VPolytope) -> Value {
    serde_json::to_value(PolytopeJson::from_polytope(p)).expect("plain data")
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(fmt_rational(x))).collect())
}

pub fn scaled_json(s: &ScaledRational) -> Value {
    json!({"q": fmt_rational(s.q()), "g": fmt_rational(s.g())})
}

/// Exact rendering with an optional marked approximation.
pub fn show_scaled(s: &ScaledRational, decimal: bool) -> String {
    if let Some(r) = s.as_rational() {
        show_rational(&r, decimal)
    } else if decimal {
        format!("{s} (≈ {:.6}, inexact)", s.to_f64())
    } else {
        s.to_string()
    }
}

pub fn show_rational(r: &Rational, decimal: bool) -> String {
    if decimal && !r.is_integer() {
        format!("{} (≈ {:.6}, inexact)", fmt_rational(r), to_f64(r))
    } else {
        fmt_rational(r)
    }
}

pub fn show_vector(v: &[Rational]) -> String {
    format!("({})", v.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
}

fn json_rational(path: &str, at: &str, v: &Value) -> Result<Rational, InputError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => return Err(malformed(path, format!("{at}: expected a rational, found {other}"))),
    };
    parse_rational(&text).map_err(|_| malformed(path, format!("{at}: not a rational number: {text:?}")))
}

fn json_vector(path: &str, at: &str, v: &Value) -> Result<QVector, InputError> {
    let arr = v
        .as_array()
        .ok_or_else(|| malformed(path, format!("{at}: expected an array")))?;
    arr.iter()
        .enumerate()
        .map(|(k, x)| json_rational(path, &format!("{at}[{k}]"), x))
        .collect()
}

fn parse_value(path: &str, text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| {
        malformed(
            path,
            format!("line {}, column {}: {}", e.line(), e.column(), e),
        )
    })
}

fn polytope_from_value(path: &str, at: &str, v: &Value) -> Result<VPolytope, InputError> {
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed(path, format!("{at}: missing integer field \"dim\"")))? as usize;
    let verts = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(path, format!("{at}: missing array field \"vertices\"")))?;
    if verts.is_empty() {
        return Err(malformed(path, format!("{at}: a polytope needs at least one vertex")));
    }
    let pts = verts
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let x = json_vector(path, &format!("{at}vertices[{k}]"), p)?;
            if x.len() != dim {
                return Err(malformed(
                    path,
                    format!("{at}vertices[{k}]: expected {dim} coordinates, found {}", x.len()),
                ));
            }
            Ok(x)
        })
        .collect::<Result<Vec<_>, _>>()?;
    VPolytope::new(&pts).map_err(|e| malformed(path, format!("{at}{e}")))
}

fn bodies_from_value(path: &str, v: &Value) -> Result<Vec<VPolytope>, InputError> {
    let list = match v {
        Value::Array(items) => items.as_slice(),
        Value::Object(map) if map.contains_key("bodies") => map["bodies"]
            .as_array()
            .ok_or_else(|| malformed(path, "\"bodies\" must be an array"))?
            .as_slice(),
        Value::Object(_) => return Ok(vec![polytope_from_value(path, "", v)?]),
        _ => return Err(malformed(path, "expected a polytope, an array of polytopes or {\"bodies\": [...]}")),
    };
    list.iter()
        .enumerate()
        .map(|(k, b)| polytope_from_value(path, &format!("bodies[{k}]: "), b))
        .collect()
}

fn read_text(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads polytopes from each file in turn. A file holds one polytope, a JSON
/// array of polytopes, or `{"bodies": [...]}`.
pub fn read_bodies(paths: &[impl AsRef<Path>]) -> Result<Vec<VPolytope>, InputError> {
    let mut out = Vec::new();
    for p in paths {
        let name = p.as_ref().display().to_string();
        let value = parse_value(&name, &read_text(p.as_ref())?)?;
        out.extend(bodies_from_value(&name, &value)?);
    }
    Ok(out)
}

pub fn collection_of(bodies: Vec<VPolytope>, source: &str) -> Result<BodyCollection, InputError> {
    let n = bodies
        .first()
        .map(VPolytope::ambient_dim)
        .ok_or_else(|| malformed(source, "no bodies given"))?;
    BodyCollection::new(n, bodies).map_err(|e| malformed(source, e.to_string()))
}

/// `{"plus": polytope, "minus": polytope, "scale": "p/q"}` for `h_plus − scale·h_minus`.
pub fn read_support_difference(path: &Path) -> Result<SupportDifference, InputError> {
    let name = path.display().to_string();
    let v = parse_value(&name, &read_text(path)?)?;
    let plus = polytope_from_value(&name, "plus: ", v.get("plus").ok_or_else(|| malformed(&name, "missing \"plus\""))?)?;
    let minus = polytope_from_value(&name, "minus: ", v.get("minus").ok_or_else(|| malformed(&name, "missing \"minus\""))?)?;
    let scale = match v.get("scale") {
        Some(s) => json_rational(&name, "scale", s)?,
        None => Rational::from_integer(1.into()),
    };
    SupportDifference::new(plus, minus, scale).map_err(|e| malformed(&name, e.to_string()))
}

pub fn read_poset(path: &Path) -> Result<Poset, InputError> {
    let name = path.display().to_string();
    Poset::parse(&read_text(path)?).map_err(|e| match e {
        afx_core::Error::Parse(m) => malformed(&name, m),
        other => malformed(&name, other.to_string()),
    })
}

pub fn collection_json(c: &BodyCollection) -> Value {
    json!({"dim": c.ambient_dim(), "bodies": c.bodies().iter().map(polytope_json).collect::<Vec<_>>()})
}

pub fn measure_json(m: &MixedAreaMeasure) -> Value {
    json!({"atoms": m.atoms().iter().map(|a| json!({"normal": vector_json(&a.normal), "weight": scaled_json(&a.weight)})).collect::<Vec<_>>()})
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn report_json(r: &CriticalityReport) -> Value {
    json!({
        "class": r.class.name(),
        "eta": one_based(&r.eta),
        "l_eta_dim": r.l_eta.dim(),
        "maximal_sets": r.maximal_sets.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
        "l_j_dims": r.l_j.iter().map(|l| l.dim()).collect::<Vec<_>>(),
    })
}

pub fn space_json(x: &ExtremalSpace) -> Value {
    json!({
        "class": x.criticality.class.name(),
        "dim": x.dim(),
        "dim_linear": x.dim_l,
        "formula_dim": x.formula_dim(),
        "decomposition_rank": x.decomposition_rank(),
        "components": x.components.iter().map(|c| json!({
            "beta": one_based(&c.beta),
            "dim": c.dim,
            "omega": c.omega.iter().map(|w| vector_json(w)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "normals": x.graph.normals.iter().map(|n| vector_json(n)).collect::<Vec<_>>(),
        "active": one_based(&x.graph.active_vertices),
        "basis": x.basis.iter().map(|b| vector_json(b)).collect::<Vec<_>>(),
        "background_seed": x.graph.seed,
    })
}

pub fn decomposition_json(d: &Decomposition) -> Value {
    json!({
        "linear": vector_json(&d.s),
        "components": d.components.iter().map(|c| vector_json(c)).collect::<Vec<_>>(),
    })
}

pub fn exst_json(r: &ExstReport) -> Value {
    json!({
        "counts": r.counts.counts,
        "log_concave": r.log_concave,
        "trivial_zeros": r.counts.zero_indices(),
        "trivial_mismatches": r.trivial_mismatches,
        "equality": r.equality_indices(),
        "condition_d": r.condition_d_indices(),
        "rows": r.rows.iter().map(|row| json!({"i": row.i, "a": row.a, "b": row.b, "c": row.c, "d": row.d})).collect::<Vec<_>>(),
        "disagreements": r.disagreements(),
        "shape_ok": r.shape_ok,
    })
}
