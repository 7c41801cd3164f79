use clap::Subcommand;
use serde_json::json;
use zigzag::adjoint::Categorified;
use zigzag::braid::{apply_word, braid_class_action, format_word, parse_word, verify_braid_relations, verify_class_action};
use zigzag::modrep::{algebra_of, Alg};
use zigzag::roots::{classify, DynkinClass, Graph};
use zigzag::zigzag::{build_skew, build_zigzag, SkewCoefficients};
use zigzag::Laurent;

use crate::error::CliError;
use crate::input::parse_module;
use crate::output::Output;
use crate::Cli;

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Invertibility, commutation and braid relations of the twist complexes.
    Verify {
        /// Use the skew zigzag algebra with alternating signs (cycles only).
        #[arg(long)]
        skew: bool,
    },
    /// Apply a braid word to a module; the result is a minimal complex.
    Apply {
        /// Vertex labels separated by spaces; a trailing ' marks an inverse.
        #[arg(long)]
        word: String,
        /// Module: `P:a`, `L:b{1}` terms joined by `+`, or `@FILE`.
        #[arg(long)]
        module: String,
    },
    /// Action on the Grothendieck group; with --word, the images of the h basis.
    ClassAction {
        #[arg(long)]
        word: Option<String>,
    },
}

fn algebra(g: &Graph, skew: bool) -> Result<Alg, CliError> {
    if !skew {
        return Ok(algebra_of(build_zigzag(g)?));
    }
    let n = g.num_vertices();
    let is_cycle = n >= 3 && g.num_edges() == n && (0..n).all(|v| g.degree(v) == 2);
    if !is_cycle {
        return Err(CliError::Input("--skew needs a cycle graph".into()));
    }
    Ok(algebra_of(build_skew(g, &SkewCoefficients::alternating_cycle(n))?))
}

fn fmt_vec(names: &[String], v: &[Laurent]) -> String {
    let terms: Vec<String> = names
        .iter()
        .zip(v)
        .filter(|(_, c)| c.num_terms() > 0)
        .map(|(n, c)| format!("({c}) {n}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    match verb {
        Verb::Verify { skew } => {
            let alg = algebra(&g, *skew)?;
            Ok(Output::from_report("braid relations", &verify_braid_relations(&alg)?))
        }
        Verb::Apply { word, module } => {
            let alg = algebra(&g, false)?;
            let w = parse_word(&alg, word)?;
            let m = parse_module(&alg, module)?;
            let c = apply_word(&alg, &w, &m)?;
            let json = json!({"word": format_word(&alg, &w), "complex": c.to_json(), "shape": c.shape_string()});
            Ok(Output::info(json, c.shape_string()))
        }
        Verb::ClassAction { word: None } => {
            let cat = Categorified::new(&g)?;
            Ok(Output::from_report("class action", &verify_class_action(&cat)?))
        }
        Verb::ClassAction { word: Some(word) } => {
            if !matches!(classify(&g)?, DynkinClass::Finite(..)) {
                return Err(CliError::Input("class action needs a finite Dynkin graph".into()));
            }
            let cat = Categorified::new(&g)?;
            let w = parse_word(&cat.alg, word)?;
            let n = cat.rank();
            let names: Vec<String> = (0..n).map(|a| format!("h_{}", cat.rep.label(a))).collect();
            let mut images = serde_json::Map::new();
            let mut text = Vec::new();
            for (a, name) in names.iter().enumerate() {
                let mut v = vec![Laurent::from_int(0); n];
                v[a] = Laurent::from_int(1);
                let img = braid_class_action(&cat.rep, &w, &v)?;
                images.insert(name.clone(), json!(img.iter().map(ToString::to_string).collect::<Vec<_>>()));
                text.push(format!("{name} -> {}", fmt_vec(&names, &img)));
            }
            let json = json!({"word": format_word(&cat.alg, &w), "basis": names, "images": images});
            Ok(Output::info(json, text.join("\n")))
        }
    }
}
