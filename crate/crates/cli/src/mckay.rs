use clap::{Args, Subcommand};
use serde_json::json;
use zigzag::mckay::{build_group, cross_product_matches, mckay_graph, sym_power_table, FiniteSubgroupSU2};

use crate::error::CliError;
use crate::output::{table, Output};
use crate::Cli;

#[derive(Args, Debug)]
pub struct GroupArg {
    /// cyclic:<n>, binary-dihedral:<n>, Q8, 2T, 2O or 2I.
    #[arg(long)]
    group: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Character table.
    Table(GroupArg),
    /// McKay graph and its affine type.
    Graph(GroupArg),
    /// Multiplicities of irreducibles in symmetric powers of the defining representation.
    SymPowers {
        #[command(flatten)]
        group: GroupArg,
        /// Largest symmetric power.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=200))]
        n: u32,
    },
    /// Compare multiplicities with the inverse quantum Cartan matrix of the McKay graph.
    Check {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(0..=200))]
        n: u32,
        /// Also compare with quadratic dual dimensions up to this power.
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=30))]
        dual: Option<u32>,
    },
}

fn group(arg: &GroupArg) -> Result<FiniteSubgroupSU2, CliError> {
    Ok(build_group(&arg.group)?)
}

pub fn run(_cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    match verb {
        Verb::Table(arg) => {
            let g = group(arg)?;
            let mut rows = vec![std::iter::once(String::new())
                .chain(g.classes.iter().map(|c| format!("{} ({})", c.name, c.size)))
                .collect::<Vec<_>>()];
            for r in &g.irreps {
                rows.push(std::iter::once(r.name.clone()).chain(r.chars.iter().map(|x| x.to_string())).collect());
            }
            let text = format!("{} of order {}, z = exp(2 pi i/{})\n{}", g.name, g.order, g.m, table(&rows));
            Ok(Output::info(g.to_json(), text))
        }
        Verb::Graph(arg) => {
            let g = group(arg)?;
            let mg = mckay_graph(&g)?;
            let json = json!({"group": g.name, "class": mg.class.to_string(), "graph": mg.graph.to_json()});
            let edges: Vec<String> = mg
                .graph
                .edges()
                .map(|(a, b)| format!("{} - {}", mg.graph.label(a), mg.graph.label(b)))
                .collect();
            Ok(Output::info(json, format!("{}: {}\n  {}", g.name, mg.class, edges.join("\n  "))))
        }
        Verb::SymPowers { group: arg, n } => {
            let g = group(arg)?;
            let rows = sym_power_table(&g, *n, false, None)?;
            let mut cells = vec![std::iter::once("n".to_string()).chain(g.irreps.iter().map(|r| r.name.clone())).collect::<Vec<_>>()];
            for k in 0..=*n {
                let mut line = vec![k.to_string()];
                line.extend(rows.iter().filter(|r| r.n == k).map(|r| r.multiplicity.to_string()));
                cells.push(line);
            }
            let json = json!({"group": g.name, "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>()});
            Ok(Output::info(json, table(&cells)))
        }
        Verb::Check { group: arg, n, dual } => {
            let g = group(arg)?;
            let rows = sym_power_table(&g, *n, true, *dual)?;
            let bad: Vec<_> = rows.iter().filter(|r| !r.matches()).collect();
            let cross = cross_product_matches(&g)?;
            let mut text = if bad.is_empty() {
                format!("all {} multiplicities match for n <= {n}", rows.len())
            } else {
                format!("{} of {} multiplicities differ", bad.len(), rows.len())
            };
            for r in &bad {
                text.push_str(&format!(
                    "\n  {} in S^{}: {} vs Cartan {:?}, dual {:?}",
                    r.irrep, r.n, r.multiplicity, r.cartan_value, r.dual_value
                ));
            }
            text.push_str(if cross {
                "\ncross-product Cartan matrix equals the quantum Cartan matrix of the McKay graph"
            } else {
                "\ncross-product Cartan matrix differs from the quantum Cartan matrix of the McKay graph"
            });
            let json = json!({
                "group": g.name,
                "n": n,
                "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "mismatches": bad.len(),
                "cross_product_cartan_matches": cross,
            });
            Ok(Output::verdict(json, text, bad.is_empty() && cross))
        }
    }
}
