use clap::Subcommand;
use serde_json::json;
use zigzag::adjoint::{
    verify_decategorification, verify_dualities, verify_euler_form, verify_form_and_involutions,
    verify_functor_relations, verify_uq_relations, Categorified,
};
use zigzag::Laurent;

use crate::error::CliError;
use crate::input::{parse_functors, parse_object};
use crate::output::Output;
use crate::Cli;

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Quantum group relations on the adjoint representation.
    VerifyUq,
    /// Functor isomorphisms, adjunctions and their classes on the object family.
    VerifyFunctors,
    /// Apply a functor word to an object.
    Act {
        /// Functors such as `E:a F:b {1} Psi`; the rightmost acts first.
        #[arg(long)]
        word: String,
        /// Object such as `P_a`, `L_b{1}`, `C_(1,0)`, joined by `+`.
        #[arg(long)]
        object: String,
    },
    /// Class of an object in the dual canonical basis.
    Class {
        #[arg(long)]
        object: String,
    },
    /// Graded Hom between two objects; without objects, verify the form,
    /// the Euler characteristic formula and the dualities.
    Form {
        #[arg(long, requires = "with")]
        object: Option<String>,
        #[arg(long, requires = "object")]
        with: Option<String>,
    },
}

/// Coordinate names: `x_mu` for roots, `l_a` for vertices.
fn basis_names(cat: &Categorified) -> Vec<String> {
    let rep = &cat.rep;
    (0..rep.num_roots())
        .map(|mu| format!("x_{}", rep.root_name(mu)))
        .chain((0..cat.rank()).map(|a| format!("l_{}", rep.label(a))))
        .collect()
}

fn class_output(cat: &Categorified, v: &[Laurent]) -> (serde_json::Value, String) {
    let names = basis_names(cat);
    let terms: Vec<(String, String)> = names
        .iter()
        .zip(v)
        .filter(|(_, c)| c.num_terms() > 0)
        .map(|(n, c)| (n.clone(), c.to_string()))
        .collect();
    let text = if terms.is_empty() {
        "0".to_string()
    } else {
        terms.iter().map(|(n, c)| format!("({c}) {n}")).collect::<Vec<_>>().join(" + ")
    };
    let json = serde_json::Value::Object(terms.into_iter().map(|(n, c)| (n, json!(c))).collect());
    (json, text)
}

pub fn run(cli: &Cli, verb: &Verb) -> Result<Output, CliError> {
    let g = cli.graph()?;
    let cat = Categorified::new(&g)?;
    match verb {
        Verb::VerifyUq => Ok(Output::from_report("quantum group relations", &verify_uq_relations(&cat.rep))),
        Verb::VerifyFunctors => {
            let mut r = verify_functor_relations(&cat)?;
            r.extend(verify_decategorification(&cat)?);
            Ok(Output::from_report("functor relations", &r))
        }
        Verb::Act { word, object } => {
            let w = parse_functors(&cat, word)?;
            let x = parse_object(&cat, object)?;
            let y = cat.apply_word(&w, &x)?;
            let (class, class_text) = class_output(&cat, &cat.class_of(&y));
            let desc = y.describe(&cat.rep);
            let json = json!({"object": desc, "class": class});
            Ok(Output::info(json, format!("{desc}\nclass: {class_text}")))
        }
        Verb::Class { object } => {
            let x = parse_object(&cat, object)?;
            let (json, text) = class_output(&cat, &cat.class_of(&x));
            Ok(Output::info(json!({"class": json}), text))
        }
        Verb::Form { object: Some(x), with: Some(y) } => {
            let (x, y) = (parse_object(&cat, x)?, parse_object(&cat, y)?);
            let h = cat.hom(&x, &y)?;
            Ok(Output::info(json!({"graded_hom": h.to_string()}), format!("sum_i q^i dim Hom(X{{i}}, Y) = {h}")))
        }
        Verb::Form { .. } => {
            let mut r = verify_form_and_involutions(&cat.rep);
            r.extend(verify_euler_form(&cat)?);
            r.extend(verify_dualities(&cat)?);
            Ok(Output::from_report("form and dualities", &r))
        }
    }
}
