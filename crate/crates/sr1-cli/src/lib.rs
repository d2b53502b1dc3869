//! IO formats, synthetic data, baselines and experiment drivers for the
//! shifted rank-1 toolkit.

pub mod baseline;
pub mod decompfile;
pub mod experiment;
pub mod matfile;
pub mod oracle;
pub mod synth;

/// Errors from file handling and experiment drivers.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] sr1_core::Error),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("search space too large: {0}")]
    TooLarge(String),
}

impl CliError {
    /// Process exit code taxonomy: 2 parse, 3 zero/degenerate data,
    /// 4 dimension errors, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Core(sr1_core::Error::ZeroMatrix)
            | CliError::Core(sr1_core::Error::DegenerateInput) => 3,
            CliError::Core(sr1_core::Error::DimensionMismatch { .. })
            | CliError::Core(sr1_core::Error::DataLength { .. })
            | CliError::Core(sr1_core::Error::InvalidDimensions { .. })
            | CliError::Core(sr1_core::Error::NonFinite) => 4,
            _ => 1,
        }
    }
}
