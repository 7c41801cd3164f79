use std::fmt::Display;
use std::process::ExitCode;

use serde_json::json;
use zigzag::adjoint::SetupError;
use zigzag::braid::BraidError;
use zigzag::mckay::McKayError;
use zigzag::modrep::ModError;
use zigzag::roots::GraphError;
use zigzag::zigzag::AlgebraError;

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or data: exit code 2.
    Input(String),
    /// A computation broke an invariant it guarantees: exit code 3.
    Internal(String),
}

impl CliError {
    pub fn input(e: impl Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn internal(e: impl Display) -> Self {
        CliError::Internal(e.to_string())
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn report(&self, command: &str, as_json: bool) -> ExitCode {
        let (kind, msg) = match self {
            CliError::Input(m) => ("invalid-input", m),
            CliError::Internal(m) => ("internal-error", m),
        };
        if as_json {
            let doc = json!({"schema": "zz/1", "command": command, "status": kind, "error": msg});
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        eprintln!("zz: {kind}: {msg}");
        ExitCode::from(self.code())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::input(e)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Malformed(_) => CliError::internal(e),
            _ => CliError::input(e),
        }
    }
}

impl From<SetupError> for CliError {
    fn from(e: SetupError) -> Self {
        CliError::input(e)
    }
}

impl From<ModError> for CliError {
    fn from(e: ModError) -> Self {
        match e {
            ModError::UnknownVertex(_) | ModError::NotChain | ModError::AlgebraMismatch | ModError::Malformed(_) => {
                CliError::input(e)
            }
            _ => CliError::internal(e),
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::Mod(m) => m.into(),
            BraidError::UnknownVertex(_) | BraidError::NotWeightZero { .. } => CliError::input(e),
            BraidError::Invariant(_) => CliError::internal(e),
        }
    }
}

impl From<McKayError> for CliError {
    fn from(e: McKayError) -> Self {
        match e {
            McKayError::UnknownGroup(_) | McKayError::NotBinary(_) | McKayError::Graph(_) => CliError::input(e),
            McKayError::NoAffineMatch { .. } => CliError::input(e),
            McKayError::BadTable { .. } | McKayError::NotIntegral(_) => CliError::internal(e),
        }
    }
}
