use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EliminationError {
    #[error("malformed polynomial: {0}")]
    Parse(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("curve equation is not squarefree")]
    NotSquarefree,
    #[error("declared degree {declared} but the equation has total degree {actual}")]
    DegreeMismatch { declared: u32, actual: u32 },
    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),
    #[error("elimination inconclusive: {0}")]
    Inconclusive(String),
}
