use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range [2, 2^31)")]
    ModulusOutOfRange(u64),
    #[error("elements from different fields: F_{0} and F_{1}")]
    FieldMismatch(u64, u64),
    #[error("subgroup order {order} does not divide p - 1 = {group_order}")]
    Divisibility { order: u64, group_order: u64 },
    #[error("no prime p >= {min_size} with p = 1 mod {modulus} below {ceiling}")]
    SearchLimit { modulus: u64, min_size: u64, ceiling: u64 },
    #[error("duplicate abscissa {0} in interpolation set")]
    DuplicateAbscissa(u64),
    #[error("duplicate point {0} in evaluation set")]
    DuplicatePoint(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("surplus symbols are inconsistent with the interpolant at coordinate {0}")]
    InconsistentSymbols(usize),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("layout error: {0}")]
    Layout(String),
    #[error("condition violated: {0}")]
    ConditionViolation(String),
    #[error("input {0} is not a codeword of the initial code")]
    NotACodeword(usize),
    #[error("repair group of coordinate {coord} has another erasure at {other}")]
    InsufficientGroup { coord: usize, other: usize },
    #[error("enumeration of {0} codewords exceeds the budget of {1}")]
    BudgetExceeded(u128, u128),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed spec file: {0}")]
    Parse(String),
}

impl CodeError {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            CodeError::Io(_) | CodeError::Parse(_) => 4,
            CodeError::ConditionViolation(_)
            | CodeError::NotACodeword(_)
            | CodeError::InconsistentSymbols(_) => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            CodeError::NotPrime(_) => "not_prime",
            CodeError::ModulusOutOfRange(_) => "modulus_out_of_range",
            CodeError::FieldMismatch(..) => "field_mismatch",
            CodeError::Divisibility { .. } => "divisibility",
            CodeError::SearchLimit { .. } => "search_limit",
            CodeError::DuplicateAbscissa(_) => "duplicate_abscissa",
            CodeError::DuplicatePoint(_) => "duplicate_point",
            CodeError::Dimension(_) => "dimension",
            CodeError::SingularMatrix => "singular_matrix",
            CodeError::InconsistentSymbols(_) => "inconsistent_symbols",
            CodeError::Parameter(_) => "parameter",
            CodeError::Layout(_) => "layout",
            CodeError::ConditionViolation(_) => "condition_violation",
            CodeError::NotACodeword(_) => "not_a_codeword",
            CodeError::InsufficientGroup { .. } => "insufficient_group",
            CodeError::BudgetExceeded(..) => "budget_exceeded",
            CodeError::Io(_) => "io",
            CodeError::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, CodeError>;
