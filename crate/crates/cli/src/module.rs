use clap::{Args, Subcommand};
use serde_json::json;
use zigzag::modrep::{
    algebra_of, chain_order, decompose, graded_hom, matches_up_to_shift, projective, regular_bimodule,
    right_projective, simple, tensor_over, typea_indecomposables, Alg, GradedModule,
};
use zigzag::zigzag::build_zigzag;

use crate::error::CliError;
use crate::input::{dim_vector, dim_vector_json, format_dim_vector, parse_module};
use crate::output::Output;
use crate::Cli;

#[derive(Args, Debug)]
pub struct ModuleArg {
    /// Module: `P:a`, `L:b{1}` terms joined by `+`, or `@FILE` with module JSON.
    #[arg(long)]
    module: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Indecomposable graded modules of a type A zigzag algebra, up to shift.
    Indecomposables,
    /// Krull-Schmidt decomposition.
    Decompose(ModuleArg),
    /// Graded dimension of Hom(M, N): the coefficient of q^i is dim Hom(M{i}, N).
    Hom {
        #[command(flatten)]
        src: ModuleArg,
        /// Target module, same syntax as --module.
        #[arg(long)]
        to: String,
    },
    /// Tensor product over the algebra with a bimodule or right module.
    Tensor {
        /// `A` (regular bimodule) or `rP:a` (right projective).
        #[arg(long)]
        bimodule: String,
        #[command(flatten)]
        module: ModuleArg,
    },
}

/// Candidates for naming a summand: projectives, simples, and the type A
/// list when the graph is a chain.
fn catalogue(alg: &Alg) -> Vec<(String, GradedModule)> {
    let labels = alg.vertex_labels();
    let mut out = Vec::new();
    for (v, l) in labels.iter().enumerate() {
        out.push((format!("P:{l}"), projective(alg, v)));
        out.push((format!("L:{l}"), simple(alg, v)));
    }
    if chain_order(alg).is_ok() {
        if let Ok(list) = typea_indecomposables(alg) {
            out.extend(list.into_iter().enumerate().map(|(i, m)| (format!("M{i}"), m)));
        }
    }
    out
}

fn name_of(m: &GradedModule, cat: &[(String, GradedModule)]) -> Result<Option<String>, CliError> {
    let mods: Vec<GradedModule> = cat.iter().map(|(_, m)| m.clone()).collect();
    Ok(matches_up_to_shift(m, &mods)?.map(|(i, k)| {
        if k == 0 {
            cat[i].0.clone()
        } else {
            format!("{}{{{k}}}", cat[i].0)
        }
    }))
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    let alg = algebra_of(build_zigzag(&g)?);
    match verb {
        Verb::Indecomposables => {
            let list = typea_indecomposables(&alg)?;
            let mut text = format!("{} indecomposables up to shift:", list.len());
            let mut items = Vec::new();
            for (i, m) in list.iter().enumerate() {
                let dv = dim_vector(m);
                text.push_str(&format!("\n  M{i}: {}", format_dim_vector(&alg, &dv)));
                items.push(json!({"name": format!("M{i}"), "dim": m.total_dim(), "graded_dims": dim_vector_json(&alg, &dv)}));
            }
            Ok(Output::info(json!({"count": list.len(), "modules": items}), text))
        }
        Verb::Decompose(arg) => {
            let m = parse_module(&alg, &arg.module)?;
            let parts = decompose(&m)?;
            let cat = catalogue(&alg);
            let mut text = format!("{} summands:", parts.len());
            let mut items = Vec::new();
            for s in &parts {
                let dv = dim_vector(&s.module);
                let name = name_of(&s.module, &cat)?;
                text.push_str(&format!(
                    "\n  {}: {}",
                    name.as_deref().unwrap_or("?"),
                    format_dim_vector(&alg, &dv)
                ));
                items.push(json!({"name": name, "dim": s.module.total_dim(), "graded_dims": dim_vector_json(&alg, &dv)}));
            }
            Ok(Output::info(json!({"dim": m.total_dim(), "summands": items}), text))
        }
        Verb::Hom { src, to } => {
            let m = parse_module(&alg, &src.module)?;
            let n = parse_module(&alg, to)?;
            let h = graded_hom(&m, &n)?;
            Ok(Output::info(json!({"graded_hom": h.to_string()}), format!("graded dim Hom = {h}")))
        }
        Verb::Tensor { bimodule, module } => {
            let x = match bimodule.as_str() {
                "A" => regular_bimodule(&alg),
                s => match s.strip_prefix("rP:") {
                    Some(v) => right_projective(&alg, alg.vertex(v).map_err(CliError::input)?),
                    None => return Err(CliError::Input(format!("bad bimodule {s:?}; expected A or rP:<vertex>"))),
                },
            };
            let m = parse_module(&alg, &module.module)?;
            let t = tensor_over(&x, &m)?.module;
            let graded: serde_json::Map<String, serde_json::Value> =
                t.graded_dims().iter().map(|(d, n)| (d.to_string(), json!(n))).collect();
            let text = if bimodule == "A" {
                format!("dim {}: {}", t.total_dim(), format_dim_vector(&alg, &dim_vector(&t)))
            } else {
                let parts: Vec<String> = t.graded_dims().iter().map(|(d, n)| format!("{n} in degree {d}")).collect();
                format!("dim {}: {}", t.total_dim(), if parts.is_empty() { "0".into() } else { parts.join(", ") })
            };
            Ok(Output::info(json!({"dim": t.total_dim(), "graded_dims": graded}), text))
        }
    }
}
