//! Parsers for graph, module, object and functor arguments.

use std::path::Path;

use zigzag::adjoint::{CObject, Categorified, Fun};
use zigzag::modrep::{ground, projective, simple, Alg, GradedModule};
use zigzag::roots::Graph;
use zigzag::Laurent;

use crate::error::CliError;

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

/// A named graph, or a JSON file when the argument names one.
pub fn load_graph(spec: &str) -> Result<Graph, CliError> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        return Ok(Graph::from_json_str(&read_file(spec)?)?);
    }
    Ok(Graph::named(spec)?)
}

/// Splits `NAME{k}` into the name and shift.
fn split_shift(term: &str) -> Result<(&str, i32), CliError> {
    let term = term.trim();
    match term.strip_suffix('}').and_then(|t| t.split_once('{')) {
        Some((name, k)) => {
            let k = k.trim().parse().map_err(|_| CliError::Input(format!("bad shift in {term:?}")))?;
            Ok((name.trim(), k))
        }
        None => Ok((term, 0)),
    }
}

fn vertex(alg: &Alg, label: &str) -> Result<usize, CliError> {
    alg.vertex(label).map_err(CliError::input)
}

/// Left module from `P:a`, `L:a` terms with optional `{k}` shifts joined by
/// `+`, or `@FILE` holding module JSON.
pub fn parse_module(alg: &Alg, spec: &str) -> Result<GradedModule, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let v: serde_json::Value = serde_json::from_str(&read_file(path)?).map_err(CliError::input)?;
        return Ok(GradedModule::from_json(alg.clone(), ground(), &v)?);
    }
    let mut parts = Vec::new();
    for term in spec.split('+') {
        let (name, k) = split_shift(term)?;
        let m = match name.split_once(':') {
            Some(("P", v)) => projective(alg, vertex(alg, v)?),
            Some(("L", v)) => simple(alg, vertex(alg, v)?),
            _ => return Err(CliError::Input(format!("bad module term {name:?}; expected P:<vertex> or L:<vertex>"))),
        };
        parts.push(m.shift(k));
    }
    let refs: Vec<&GradedModule> = parts.iter().collect();
    Ok(GradedModule::direct_sum(&refs)?.0)
}

/// Object of the categorification: family names (`P_a`, `L_a`, `C_(1,0)`)
/// with optional `{k}` shifts, joined by `+`.
pub fn parse_object(cat: &Categorified, spec: &str) -> Result<CObject, CliError> {
    let family = cat.family();
    let mut acc: Option<CObject> = None;
    for term in spec.split('+') {
        let (name, k) = split_shift(term)?;
        let name = name.replacen(':', "_", 1);
        let (_, obj) = family.iter().find(|(n, _)| *n == name).ok_or_else(|| {
            let names: Vec<&str> = family.iter().map(|(n, _)| n.as_str()).collect();
            CliError::Input(format!("unknown object {name:?}; expected one of {}", names.join(", ")))
        })?;
        let obj = obj.shift(k);
        acc = Some(match acc {
            None => obj,
            Some(a) => a.sum(&obj)?,
        });
    }
    acc.ok_or_else(|| CliError::Input("empty object".into()))
}

/// Functor word such as `E:a F:b {1} Psi`; the rightmost acts first.
pub fn parse_functors(cat: &Categorified, spec: &str) -> Result<Vec<Fun>, CliError> {
    let labels = cat.alg.vertex_labels();
    let vertex = |v: &str| {
        labels
            .iter()
            .position(|l| l == v)
            .ok_or_else(|| CliError::Input(format!("unknown vertex {v:?}")))
    };
    spec.split_whitespace()
        .map(|tok| {
            if let Some(k) = tok.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
                return k.parse().map(Fun::Shift).map_err(|_| CliError::Input(format!("bad shift {tok:?}")));
            }
            match tok {
                "Psi" => return Ok(Fun::Psi),
                "Omega" => return Ok(Fun::Omega),
                _ => {}
            }
            match tok.split_once(':') {
                Some(("E", v)) => Ok(Fun::E(vertex(v)?)),
                Some(("F", v)) => Ok(Fun::F(vertex(v)?)),
                Some(("K", v)) => Ok(Fun::K(vertex(v)?)),
                Some(("Kinv", v)) => Ok(Fun::KInv(vertex(v)?)),
                _ => Err(CliError::Input(format!(
                    "bad functor {tok:?}; expected E:<v>, F:<v>, K:<v>, Kinv:<v>, {{k}}, Psi or Omega"
                ))),
            }
        })
        .collect()
}

/// Graded dimension per vertex, as Laurent polynomials.
pub fn dim_vector(m: &GradedModule) -> Vec<Laurent> {
    (0..m.left().num_vertices()).map(|v| m.graded_dim_at(v, 0)).collect()
}

pub fn format_dim_vector(alg: &Alg, v: &[Laurent]) -> String {
    let parts: Vec<String> = alg
        .vertex_labels()
        .iter()
        .zip(v)
        .filter(|(_, d)| d.num_terms() > 0)
        .map(|(l, d)| format!("{l}: {d}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

pub fn dim_vector_json(alg: &Alg, v: &[Laurent]) -> serde_json::Value {
    serde_json::Value::Object(
        alg.vertex_labels()
            .iter()
            .zip(v)
            .map(|(l, d)| (l.clone(), serde_json::Value::String(d.to_string())))
            .collect(),
    )
}
