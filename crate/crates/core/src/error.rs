use thiserror::Error;

/// Errors raised anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("no primitive {n}-th root of unity in {field}")]
    NoSuchRoot { field: String, n: u64 },
    #[error("invalid field descriptor: {0}")]
    InvalidField(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("action not finitely supported: {0}")]
    ActionNotFinitelySupported(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("unsupported extension: {0} -> {1}")]
    UnsupportedExtension(String, String),
    #[error("module axiom violated: {0}")]
    NotAModule(String),
    #[error("window overflow: {0}")]
    WindowOverflow(String),
    #[error("budget exceeded: reached {reached}, budget {budget}")]
    BudgetExceeded { reached: usize, budget: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("recursion cap {0} reached")]
    RecursionCap(usize),
    #[error("confluence failure on overlap {0}")]
    NotConfluent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// A parse error on a one-line input.
    pub fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}
