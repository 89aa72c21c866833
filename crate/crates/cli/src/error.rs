use std::path::PathBuf;

use hepta::HeptaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Hepta(#[from] HeptaError),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("malformed JSON: {0}")]
    Json(serde_json::Error),

    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    /// 0 success, 1 singular or failed verification, 2 invalid input,
    /// 3 zero `g_i` in a forced numeric mode.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Hepta(e) => match e {
                HeptaError::ZeroSuperDiagonal(_) => 3,
                HeptaError::SingularMatrix
                | HeptaError::DivisionByZero
                | HeptaError::PoleAtZero
                | HeptaError::InternalPole { .. } => 1,
                HeptaError::InvalidOrder(_)
                | HeptaError::BandLength { .. }
                | HeptaError::DimensionMismatch { .. }
                | HeptaError::NotHeptadiagonal { .. }
                | HeptaError::Parse(_) => 2,
            },
            CliError::Io { .. } | CliError::Json(_) => 2,
            CliError::VerificationFailed => 1,
        }
    }

    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Hepta(HeptaError::ZeroSuperDiagonal(_)) => Some("rerun with --mode symbolic or --mode auto"),
            _ => None,
        }
    }
}
