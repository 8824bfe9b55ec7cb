use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped by the CLI exit code they map to: parse and
/// parameter errors (2), failed verifications (1), and size caps (3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclic factor order {0} is below 2")]
    InvalidOrder(usize),

    #[error("group order {order} exceeds the configured cap {cap}")]
    GroupTooLarge { order: u128, cap: usize },

    #[error("operands live on different groups")]
    GroupMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("{what} has size {size}, above the cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("character set is not dissociated (witness {witness:?})")]
    NotDissociated { witness: Vec<i8> },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("width underflow: {0}")]
    WidthUnderflow(String),

    #[error("round budget of {budget} exhausted")]
    RoundBudget { budget: usize },

    #[error("no regular width found; best candidate {best_delta} has measured constant {best_constant}")]
    NoRegularWidth { best_delta: f64, best_constant: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidParameter(_) | Error::InvalidOrder(_) | Error::Io(_) => 2,
            Error::GroupTooLarge { .. }
            | Error::CapExceeded { .. }
            | Error::RoundBudget { .. }
            | Error::WidthUnderflow(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
