//! `zz`: command-line frontend for the zigzag toolkit.

mod adjoint;
mod algebra;
mod braid;
mod cartan;
mod error;
mod graph;
mod input;
mod mckay;
mod module;
mod output;

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand};

use error::CliError;
use output::Output;

#[derive(Parser, Debug)]
#[command(name = "zz", version, about = "Exact computations with zigzag algebras and their categorifications")]
pub struct Cli {
    /// Named graph (A3, D4, affE6, chain:5, ...) or a graph JSON file.
    #[arg(long, global = true)]
    graph: Option<String>,

    /// Truncation order for power series.
    #[arg(long, global = true, env = "ZZ_ORDER", default_value_t = 12,
          value_parser = clap::value_parser!(u32).range(0..=200))]
    order: u32,

    /// Emit the versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// List every check, not only failures.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    noun: Noun,
}

#[derive(Subcommand, Debug)]
enum Noun {
    /// Graph classification and root systems.
    #[command(subcommand)]
    Graph(graph::Verb),
    /// Zigzag algebras and trivial extensions.
    #[command(subcommand)]
    Algebra(algebra::Verb),
    /// Quantum Cartan matrices and their inverses.
    #[command(subcommand)]
    Cartan(cartan::Verb),
    /// Graded modules over the zigzag algebra.
    #[command(subcommand)]
    Module(module::Verb),
    /// The adjoint representation and its categorification.
    #[command(subcommand)]
    Adjoint(adjoint::Verb),
    /// Braid group action by complexes of bimodules.
    #[command(subcommand)]
    Braid(braid::Verb),
    /// Finite subgroups of SU(2) and the McKay correspondence.
    #[command(subcommand)]
    Mckay(mckay::Verb),
    /// Run every acceptance criterion; exit code 0 iff all pass.
    Selftest {
        /// Include the binary icosahedral group.
        #[arg(long)]
        slow: bool,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=16))]
        only: Vec<u8>,
    },
}

impl Cli {
    fn graph(&self) -> Result<zigzag::roots::Graph, CliError> {
        let spec = self.graph.as_deref().ok_or_else(|| CliError::Input("--graph is required".into()))?;
        input::load_graph(spec)
    }

    fn order(&self) -> usize {
        self.order as usize
    }
}

fn selftest(slow: bool, only: &[u8]) -> Output {
    let ids: Vec<u8> = if only.is_empty() { (1..=16).collect() } else { only.to_vec() };
    let outcomes: Vec<_> = ids.iter().map(|&id| zigzag::selftest::run(id, slow)).collect();
    let text = outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n");
    let pass = outcomes.iter().all(|o| o.pass);
    let json = serde_json::json!({
        "criteria": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
        "passed": outcomes.iter().filter(|o| o.pass).count(),
        "total": outcomes.len(),
    });
    Output::verdict(json, text, pass)
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.noun {
        Noun::Graph(v) => graph::run(cli, v),
        Noun::Algebra(v) => algebra::run(cli, v),
        Noun::Cartan(v) => cartan::run(cli, v),
        Noun::Module(v) => module::run(cli, v),
        Noun::Adjoint(v) => adjoint::run(cli, v),
        Noun::Braid(v) => braid::run(cli, v),
        Noun::Mckay(v) => mckay::run(cli, v),
        Noun::Selftest { slow, only } => Ok(selftest(*slow, only)),
    }
}

/// `noun verb` of the invoked subcommand.
fn command_name(m: &ArgMatches) -> String {
    match m.subcommand() {
        Some((noun, sub)) => match sub.subcommand_name() {
            Some(verb) => format!("{noun} {verb}"),
            None => noun.to_string(),
        },
        None => String::new(),
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let command = command_name(&matches);
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli)));
    let _ = panic::take_hook();
    let result = match result {
        Ok(r) => r,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(CliError::Internal(msg))
        }
    };
    match result {
        Ok(out) => match out.emit(&command, cli.json, cli.verbose > 0, cli.out.as_deref()) {
            Ok(code) => ExitCode::from(code),
            Err(e) => e.report(&command, cli.json),
        },
        Err(e) => e.report(&command, cli.json),
    }
}
