use clap::Subcommand;
use serde_json::json;
use zigzag::report::Report;
use zigzag::roots::all_orientations;
use zigzag::zigzag::{build_zigzag, path_algebra, trivial_extension, trivial_extension_to_zigzag};

use crate::error::CliError;
use crate::output::{table, Output};
use crate::Cli;

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Basis, grading and structure constants.
    Build,
    /// Graded dimensions.
    Dims,
    /// Symmetry and nondegeneracy of the trace form.
    TraceCheck,
    /// Isomorphism with the trivial extension of the path algebra, for every orientation.
    TrivialExtensionCheck,
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    let a = build_zigzag(&g)?;
    match verb {
        Verb::Build => {
            let mut rows = vec![vec!["basis".into(), "src".into(), "tgt".into(), "deg".into()]];
            for b in a.basis() {
                rows.push(vec![
                    b.label.clone(),
                    a.vertex_labels()[b.src].clone(),
                    a.vertex_labels()[b.tgt].clone(),
                    b.deg.to_string(),
                ]);
            }
            Ok(Output::info(a.to_json(), format!("dimension {}\n{}", a.dim(), table(&rows))))
        }
        Verb::Dims => {
            let dims = a.graded_dims();
            let text = dims.iter().map(|(d, n)| format!("degree {d}: {n}")).collect::<Vec<_>>().join("\n");
            let json = json!({
                "total": a.dim(),
                "graded": dims.iter().map(|(d, n)| (d.to_string(), json!(n))).collect::<serde_json::Map<_, _>>(),
                "vertices": g.num_vertices(),
                "edges": g.num_edges(),
            });
            Ok(Output::info(json, text))
        }
        Verb::TraceCheck => {
            let mut r = Report::new();
            let mut asym = Vec::new();
            for x in 0..a.dim() {
                for y in x + 1..a.dim() {
                    if a.trace_of(a.mul_basis(x, y)) != a.trace_of(a.mul_basis(y, x)) {
                        asym.push(format!("({}, {})", a.basis()[x].label, a.basis()[y].label));
                    }
                }
            }
            r.push("tr(xy) = tr(yx)", "all basis pairs", asym.is_empty(), asym.first().cloned());
            let nondeg = a.gram_matrix().is_invertible();
            r.push("nondegenerate", "gram matrix", nondeg, None);
            Ok(Output::from_report("trace form", &r))
        }
        Verb::TrivialExtensionCheck => {
            if !g.is_tree() {
                return Err(CliError::Input("trivial extension check needs a tree".into()));
            }
            let mut r = Report::new();
            for o in all_orientations(&g) {
                let b = path_algebra(&o, true)?;
                let t = trivial_extension(&b, 2)?;
                let name = o
                    .arrows
                    .iter()
                    .map(|&(s, t)| format!("{}->{}", g.label(s), g.label(t)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let res = trivial_extension_to_zigzag(&o, &t, &a).map(|phi| phi.check_isomorphism(&t, &a));
                match res {
                    Ok(Ok(())) => r.push("T(B) = A", name, true, None),
                    Ok(Err(why)) => r.push("T(B) = A", name, false, Some(why)),
                    Err(e) => r.push("T(B) = A", name, false, Some(e.to_string())),
                }
            }
            Ok(Output::from_report("trivial extension", &r))
        }
    }
}
