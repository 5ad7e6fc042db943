//! Library surface of the batch front-end: job parsing/dispatch and the
//! fixture suite. The `theta-orbits` binary is a thin wrapper over this.

pub mod fixtures;
pub mod job;

pub use job::{Job, JobInput, JobKind, OutputFormat, RamificationInput, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Engine(theta_orbits::Error),
    #[error("{0}")]
    Schema(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(_) => 1,
            CliError::Schema(_) => 2,
        }
    }
}

/// `"2,3,7"` -> `[2, 3, 7]`.
pub fn parse_signature_list(s: &str) -> Result<Vec<u64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| CliError::Schema(format!("bad signature entry {part:?}: {e}")))
        })
        .collect()
}
