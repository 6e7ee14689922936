use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants fall into four groups that the command line maps onto exit
/// codes: invalid input, precision exhaustion, exceeded budgets, and internal
/// invariant violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is reducible; factor {factor}")]
    Reducible { factor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("element is not a unit")]
    NotUnit,
    #[error("element is not an algebraic integer")]
    NotIntegral,
    #[error("ratio of conjugates undefined: polynomial vanishes at 0")]
    ZeroRoot,
    #[error("signature ({s}, {t}) not supported here: {reason}")]
    InvalidSignature { s: usize, t: usize, reason: String },
    #[error("precision exhausted at {digits} digits: {context}")]
    PrecisionExhausted { digits: u32, context: String },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("candidate budget exceeded: {needed} candidates, cap {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("boundary tie: Mahler measure of {poly} cannot be separated from the bound {bound}")]
    BoundaryTie { poly: String, bound: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidInput(_) => "invalid_input",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NotSquarefree => "not_squarefree",
            Error::NotMonic => "not_monic",
            Error::Reducible { .. } => "reducible",
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch => "field_mismatch",
            Error::NotUnit => "not_unit",
            Error::NotIntegral => "not_integral",
            Error::ZeroRoot => "zero_root",
            Error::InvalidSignature { .. } => "invalid_signature",
            Error::PrecisionExhausted { .. } => "precision_exhausted",
            Error::DegreeCapExceeded { .. } => "degree_cap_exceeded",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::BoundaryTie { .. } => "boundary_tie",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
