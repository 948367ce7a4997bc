use thiserror::Error;

/// Errors raised by the library.
///
/// Several variants (`InconsistentSystem`, `NotMonomialMatrix`,
/// `AmbiguousRule`) can only fire if an algebraic identity fails to hold;
/// they carry the offending indices so the failure can be reproduced.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no t-degree range")]
    ZeroPolynomial,
    #[error("cannot substitute r = 0 into a Laurent polynomial")]
    ZeroSubstitution,
    #[error("invalid type {family}{rank}: A needs rank >= 1, D needs rank >= 4, E needs rank 6, 7 or 8")]
    InvalidType { family: String, rank: usize },
    #[error("{0:?} is not a root of this root system")]
    UnknownRoot(Vec<i32>),
    #[error("root set is not closed: roots {0} and {1} sum to a root outside the set")]
    NotClosed(usize, usize),
    #[error("state space of size {size} exceeds the enumeration bound {bound}")]
    TooLarge { size: u128, bound: u128 },
    #[error("T-table equations have no applicable rule at k = {k}, root index {root}")]
    InconsistentSystem { k: usize, root: usize },
    #[error("no exponent recursion applies at k = {k}, root index {root}")]
    RuleNotApplicable { k: usize, root: usize },
    #[error("matrix is not a scalar multiple of a permutation matrix (column {column})")]
    NotMonomialMatrix { column: usize },
    #[error("U-matrix entry ({gamma}, {beta}) depends on the choice of k")]
    AmbiguousRule { gamma: usize, beta: usize },
    #[error("vector is outside the positive cone at coordinate {coordinate}")]
    NotInCone { coordinate: usize },
    #[error("enumeration needs {needed} words, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("no factorisation of length <= {maxlen} found")]
    NotFound { maxlen: usize },
    #[error("negative letter {letter} in a positive word")]
    NegativeLetter { letter: i64 },
    #[error("letter {letter} is out of range for rank {rank}")]
    InvalidLetter { letter: i64, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
