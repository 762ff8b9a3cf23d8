use thiserror::Error;

use crate::rootsystem::DynkinFamily;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Dynkin family {0:?} (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),

    #[error("rank out of range for family {family} (got {rank}, {expected})")]
    RankOutOfRange {
        family: DynkinFamily,
        rank: usize,
        expected: &'static str,
    },

    #[error("weight has {got} coordinates but the rank is {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("{0:?} is not a positive root of this system")]
    NotAPositiveRoot(Vec<u32>),

    /// A mathematical invariant that the pipeline relies on did not hold.
    /// This always indicates a bug, never bad input.
    #[error("internal invariant `{name}` violated: {detail}")]
    Invariant { name: &'static str, detail: String },
}

impl Error {
    pub(crate) fn invariant(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            name,
            detail: detail.into(),
        }
    }

    /// True for errors caused by the caller's input rather than by an
    /// internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant { .. })
    }
}
