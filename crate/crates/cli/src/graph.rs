use clap::Subcommand;
use serde_json::json;
use zigzag::roots::{classify, generate_roots, height};

use crate::error::CliError;
use crate::output::Output;
use crate::Cli;

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Finite, affine or other Dynkin type.
    Classify,
    /// Root system of a finite Dynkin graph.
    Roots,
}

fn fmt_root(r: &[i64]) -> String {
    format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    match verb {
        Verb::Classify => {
            let class = classify(&g)?;
            let kind = if class.is_finite() {
                "finite"
            } else if class.is_affine() {
                "affine"
            } else {
                "other"
            };
            let json = json!({
                "graph": g.to_json(),
                "class": class.to_string(),
                "kind": kind,
                "vertices": g.num_vertices(),
                "edges": g.num_edges(),
                "coxeter_number": class.coxeter_number(),
            });
            let text = format!("{kind} {class} ({} vertices, {} edges)", g.num_vertices(), g.num_edges());
            Ok(Output::info(json, text))
        }
        Verb::Roots => {
            let rs = generate_roots(&g)?;
            let positive: Vec<_> = rs.positive_roots().collect();
            let json = json!({
                "simple_roots": g.labels(),
                "pairing": rs.pairing,
                "count": rs.roots.len(),
                "positive_count": positive.len(),
                "roots": rs.roots,
            });
            let mut text = format!("{} roots, {} positive:", rs.roots.len(), positive.len());
            for r in positive {
                text.push_str(&format!("\n  {}  height {}", fmt_root(r), height(r)));
            }
            Ok(Output::info(json, text))
        }
    }
}
