use reciprocity_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    /// 1 verification failure, 2 usage or parse error, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(CoreError::BudgetExceeded { .. }) => 3,
            CliError::Core(CoreError::FourierResidue { .. } | CoreError::NonPolynomial(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}
