use clap::Subcommand;
use serde_json::{json, Value};
use zigzag::zigzag::{cartan_inverse, compare_add_minus, quadratic_dual_dims, quantum_cartan};

use crate::error::CliError;
use crate::output::{table, Output};
use crate::Cli;

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Quantum Cartan matrix.
    Show,
    /// Inverse as power series to --order.
    Inverse,
    /// Graded dimensions of the quadratic dual to --order.
    DualDims,
    /// Cartan matrix times the dual Cartan matrix at -q, to --order.
    Compare,
}

fn matrix_output(labels: &[String], m: &[Vec<String>]) -> (Value, String) {
    let mut rows = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect::<Vec<_>>()];
    for (l, r) in labels.iter().zip(m) {
        rows.push(std::iter::once(l.clone()).chain(r.iter().cloned()).collect());
    }
    (json!({"vertices": labels, "matrix": m}), table(&rows))
}

fn strings<T: ToString>(m: &[Vec<T>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(T::to_string).collect()).collect()
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    let labels = g.labels().to_vec();
    let order = cli.order();
    match verb {
        Verb::Show => {
            let (json, text) = matrix_output(&labels, &strings(&quantum_cartan(&g)));
            Ok(Output::info(json, text))
        }
        Verb::Inverse => {
            let inv = cartan_inverse(&g, order)?;
            let (mut json, text) = matrix_output(&labels, &strings(&inv.entries));
            json["order"] = json!(order);
            json["determinant"] = json!(inv.det.to_string());
            Ok(Output::info(json, format!("det = {}\n{text}", inv.det)))
        }
        Verb::DualDims => {
            let (mut json, text) = matrix_output(&labels, &strings(&quadratic_dual_dims(&g, order)));
            json["order"] = json!(order);
            Ok(Output::info(json, text))
        }
        Verb::Compare => {
            let r = compare_add_minus(&g, order)?;
            let json = json!({
                "order": order,
                "finite_type": r.finite_type,
                "dual_identity": r.dual_identity,
                "inverse_identity": r.inverse_identity,
                "dual_agrees_with_inverse": r.agree,
            });
            let text = if r.finite_type {
                if r.inverse_identity {
                    format!("finite type: inverse identity holds to q^{order}; the quadratic dual comparison does not apply")
                } else {
                    format!("inverse identity fails below q^{order}")
                }
            } else if r.holds() {
                format!("identity holds to q^{order}")
            } else {
                format!(
                    "identity fails to q^{order}: dual {}, inverse {}, agreement {}",
                    r.dual_identity, r.inverse_identity, r.agree
                )
            };
            Ok(Output::verdict(json, text, r.holds()))
        }
    }
}
