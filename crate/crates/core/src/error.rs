use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analysing a structure.
///
/// Variants named `*Violation` signal that a computed object contradicts a
/// theorem that is known to hold; they indicate a bug, not a property of the
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("empty table")]
    Empty,

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    #[error("{what} exceeds cap: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("semigroup is not regular: element {0} has no inverse")]
    NotRegular(usize),

    #[error("biordered set is not regular: sandwich set of ({0}, {1}) is empty")]
    NotRegularBiorder(usize, usize),

    #[error("relation {relation} is not a quasi-order: {reason}")]
    NotQuasiOrder {
        relation: &'static str,
        reason: String,
    },

    #[error("biordered set fails axiom {axiom}: witness {witness:?}")]
    AxiomFailure {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("{0} and {1} are neither R- nor L-related")]
    NotChainRelated(usize, usize),

    #[error("domain condition failed: {0}")]
    DomainConditionFailed(String),

    #[error("not an E-chain: {0}")]
    InvalidChain(String),

    #[error("theorem violated ({theorem}): {witness}")]
    TheoremViolation {
        theorem: &'static str,
        witness: String,
    },

    #[error("product is not well defined: {0}")]
    WellDefinednessViolation(String),

    #[error("no normal factorization for morphism {0}")]
    FactorizationNotFound(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn violation(theorem: &'static str, witness: impl Into<String>) -> Self {
        Error::TheoremViolation {
            theorem,
            witness: witness.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
