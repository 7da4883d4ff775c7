use thiserror::Error;

/// Failures surfaced by the command-line driver.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad configuration, flag or output path.
    #[error("config error in `{parameter}`: {reason}")]
    Config { parameter: String, reason: String },
    /// A physics routine rejected its input or failed to converge.
    #[error("computation error: {0}")]
    Compute(#[from] lascat_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    /// `validate` found at least one failing check.
    #[error("{0} validation check(s) failed")]
    Validation(usize),
}

impl CliError {
    pub fn config(parameter: &str, reason: &str) -> Self {
        CliError::Config {
            parameter: parameter.to_string(),
            reason: reason.to_string(),
        }
    }

    /// Parameter-object validation failure inside config section `section`.
    pub fn invalid(section: &str, err: lascat_core::Error) -> Self {
        let parameter = match err {
            lascat_core::Error::InvalidParameter { name, .. } => format!("{section}.{name}"),
            _ => section.to_string(),
        };
        CliError::Config {
            parameter,
            reason: err.to_string(),
        }
    }

    /// 1 for configuration and IO problems, 2 for computation failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } | CliError::Io(_) => 1,
            CliError::Compute(_) | CliError::Validation(_) => 2,
        }
    }
}
