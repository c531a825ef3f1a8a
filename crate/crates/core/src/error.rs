use thiserror::Error;

use crate::descent::RuleRecord;
use crate::rootsys::Family;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}{rank} is not an admissible simple type")]
    InvalidType { family: Family, rank: usize },

    #[error("cannot parse type `{0}` (expected e.g. `A2`, `B3`, `E8`)")]
    TypeSyntax(String),

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice is not contained in the given superlattice")]
    NotASublattice,

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("Weyl group too large: order {order} exceeds bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },

    #[error("{family}{rank} is outside the ranks covered by the Gamma table")]
    RankOutOfTableRange { family: Family, rank: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} is not dominant regular")]
    NotDominantRegular(Vec<i64>),

    #[error("work bound exceeded: {what} reached {reached} (limit {limit})")]
    WorkBoundExceeded {
        what: &'static str,
        reached: usize,
        limit: usize,
    },

    #[error("verdict incomplete after {} rule(s): {source}", reasons.len())]
    VerdictIncomplete {
        reasons: Vec<RuleRecord>,
        source: Box<Error>,
    },

    #[error("semistability probe stopped at N = {n}: {source}")]
    ProbeAborted { n: u32, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
