use evolute_elimination::EliminationError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("classes live on different generator tables")]
    TableMismatch,
    #[error("class {0} has constant term different from 1 and is not invertible")]
    NotInvertible(String),
    #[error("integration table has no value for monomial {0}")]
    IncompleteDescriptor(String),
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error(
        "Thom polynomial for Sigma^{{1^{k}}} (codimension {k}) is not available; \
         only codimension 1 to 4 is supported (codimensions 5 to 8 are due to Rimányi \
         and not tabulated here)"
    )]
    UnsupportedCodimension { k: u32 },
    #[error("internal inconsistency: {0}")]
    NonIntegral(String),
    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Oracle(#[from] EliminationError),
}
