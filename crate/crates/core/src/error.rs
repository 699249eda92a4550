use thiserror::Error;

use crate::homalg::AxiomReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{context}: map is not a morphism ({} violation(s))", .report.violations.len())]
    NotMorphism { context: String, report: AxiomReport },
}

pub type Result<T> = std::result::Result<T, Error>;
