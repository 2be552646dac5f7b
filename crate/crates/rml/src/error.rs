use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rml_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed RMC1 data: {0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for failed self-checks, 2 for everything the caller can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(rml_core::Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}
