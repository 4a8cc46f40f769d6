//! Errors of the command-line tool and their exit codes.

use thiserror::Error;

use zmono_core::map::MapFileError;
use zmono_core::monodromy::{CandidateError, MonodromyError};
use zmono_core::planar::RealizeError;
use zmono_core::surface::SurfaceError;

pub const INVALID_CANDIDATE: u8 = 1;
pub const CONSTRUCTION_FAILURE: u8 = 2;
pub const VERIFICATION_MISMATCH: u8 = 3;
pub const IO_OR_FORMAT: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid candidate: {0}")]
    Candidate(#[from] CandidateError),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    MapFile {
        path: String,
        source: MapFileError,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    /// A report that has already been rendered and should be printed as is.
    #[error("{report}")]
    Reported { code: u8, report: String },
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Candidate(_) => INVALID_CANDIDATE,
            CliError::Construction(_) => CONSTRUCTION_FAILURE,
            CliError::Mismatch(_) => VERIFICATION_MISMATCH,
            CliError::Io { .. } | CliError::MapFile { .. } | CliError::Input(_) => IO_OR_FORMAT,
            CliError::Monodromy(_) => IO_OR_FORMAT,
            CliError::Reported { code, .. } => *code,
        }
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::VerificationMismatch { .. } => CliError::Mismatch(e.to_string()),
            e => CliError::Construction(e.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Realize(inner) => inner.into(),
            SurfaceError::VerificationMismatch(_) => CliError::Mismatch(e.to_string()),
            SurfaceError::Parse(_) => CliError::Input(e.to_string()),
            e => CliError::Construction(e.to_string()),
        }
    }
}
