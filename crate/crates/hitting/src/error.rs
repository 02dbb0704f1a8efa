use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] hitting_core::Error),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Process exit status: 2 for internal failures, 1 for bad or infeasible
    /// input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(hitting_core::Error::Stalled { .. }) => 2,
            _ => 1,
        }
    }
}
