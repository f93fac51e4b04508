use thiserror::Error;

use crate::perm::Transposition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label 0 is not a body; labels are 1-based")]
    ZeroLabel,
    #[error("degenerate transposition ({0} {0})")]
    DegenerateTransposition(usize),
    #[error("label {label} is outside the universe 1..={universe}")]
    LabelOutOfRange { label: usize, universe: usize },
    #[error("mapping is not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("label {0} collides with an entry of the cycle")]
    Collision(usize),
    #[error("cycle must have at least 2 distinct entries")]
    BadCycle,
    #[error("the permutation is the identity; nothing needs to be undone")]
    IdentityInput,
    #[error("factor {0} already occurs in the word")]
    DuplicateFactor(Transposition),
    #[error("index {index} is out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed verification: {0}")]
    VerificationFailed(String),
    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
