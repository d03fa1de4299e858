use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ginbetti::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("corpus drift: {0}")]
    Drift(String),
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// A hypothesis gate or genericity check declined the computation.
    pub const REFUSED: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use ginbetti::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Hypothesis(_) | E::Genericity { .. } | E::Regularity { .. } => exit::REFUSED,
                E::Internal(_) | E::Overflow(_) | E::ExponentOverflow | E::NotBorelFixed => {
                    exit::INTERNAL
                }
                E::RingMismatch { .. }
                | E::InvalidRing(_)
                | E::Inhomogeneous { .. }
                | E::ZeroGenerator { .. }
                | E::UnitIdeal
                | E::EmptyIdeal
                | E::SingularMatrix
                | E::InvalidArgument(_)
                | E::EmptyScheme
                | E::Parse { .. } => exit::INPUT,
            },
            CliError::Io { .. } | CliError::Usage(_) => exit::INPUT,
            CliError::Drift(_) => exit::INTERNAL,
        }
    }
}
