use crate::multipoly::VarId;
use thiserror::Error;

/// Broad classification used by front-ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Precondition,
    Resource,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("factors share variable {0}")]
    OverlappingVariables(VarId),

    #[error("factor {factor} has degree {degree}, above the declared bound {bound}")]
    DegreeBound {
        factor: usize,
        degree: u32,
        bound: u32,
    },

    #[error("width {width} exceeds c = {c}")]
    WidthExceeded { width: usize, c: usize },

    #[error("width parameter must be positive")]
    ZeroWidth,

    #[error("variable {0} listed more than once")]
    DuplicateVar(VarId),

    #[error("variable {0} occurs in the product but is not listed")]
    MissingVar(VarId),

    #[error("clause {clause} has {width} literals, at most 3 allowed")]
    ClauseTooWide { clause: usize, width: usize },

    #[error("clause {0} is empty")]
    EmptyClause(usize),

    #[error("literal refers to variable {var} but the formula declares {num_vars}")]
    VarOutOfRange { var: VarId, num_vars: usize },

    #[error("not a (3,3)-SAT instance: variable {var} has {positive} positive and {negative} negative occurrences")]
    NotThreeThree {
        var: VarId,
        positive: usize,
        negative: usize,
    },

    #[error("{clauses} clauses exceed twice the {vars} boolean variables; no padding is possible")]
    TooManyClauses { clauses: usize, vars: usize },

    #[error("scale must be a positive integer")]
    ZeroScale,

    #[error("expansion exceeded the term limit of {limit}")]
    TermLimit { limit: usize },

    #[error("{needed} simultaneously active factors exceed the limit of {limit}")]
    FactorLimit { needed: usize, limit: usize },

    #[error("{needed} variables exceed the truth-table limit of {limit}")]
    VarLimit { needed: usize, limit: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::TermLimit { .. } | Error::FactorLimit { .. } | Error::VarLimit { .. } => {
                ErrorKind::Resource
            }
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
