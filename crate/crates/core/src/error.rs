use thiserror::Error;

use crate::complex::Simplex;
use crate::moves::LegalityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed simplex: vertex {vertex} repeated")]
    MalformedSimplex { vertex: u32 },

    #[error("simplex {0} is not in the complex")]
    AbsentSimplex(Simplex),

    #[error("join operands share vertex {vertex}")]
    JoinCollision { vertex: u32 },

    #[error("ridge {ridge} lies in {count} facets")]
    NotPseudomanifold { ridge: Simplex, count: usize },

    #[error("complex is not pure")]
    NotPure,

    #[error("illegal move: {0}")]
    IllegalMove(Box<LegalityReport>),

    #[error("illegal move at step {index}: {report}")]
    IllegalAtStep {
        index: usize,
        report: Box<LegalityReport>,
    },

    #[error("{what}: budget of {limit} exhausted")]
    BudgetExhausted { what: String, limit: u64 },

    #[error("invalid shelling at step {index}: {reason}")]
    InvalidShelling { index: usize, reason: String },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("expansion failed: {0}")]
    Expansion(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::BudgetExhausted {
            what: what.into(),
            limit,
        }
    }
}
