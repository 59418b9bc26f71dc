//! Interpretation of λ-terms in partial pairs and their completions.

mod decide;
mod engine;
mod env;
mod finite;
mod slice;
mod witness;

use thiserror::Error;

pub use decide::decide_member_normal;
pub use env::Env;
pub use finite::interp_finite;
pub use slice::{
    default_schedule, interp_slice, member_semi, members_at, pair_slice, Exactness, MemberOutcome, Slice,
};
pub use witness::{extract_witness_subpair, omega_characterization_check};

use crate::completion::CompletionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("element {0} is outside the pair")]
    ForeignElement(String),
    #[error("de Bruijn index {0} is not bound")]
    DanglingIndex(usize),
    #[error("term has no normal form within {fuel} steps")]
    NotNormal { fuel: usize },
    #[error("web {0} cannot decompose its atoms; exact membership needs an effective web")]
    Unsupported(String),
    #[error("{0} is not in the slice")]
    NotInSlice(String),
    #[error("enumerating subsets of a {elements}-element stratum exceeds the limit of {limit}")]
    SubsetLimit { elements: usize, limit: usize },
    #[error("evaluation exceeded {0} steps")]
    StepLimit(u64),
    #[error("empty budget schedule")]
    EmptySchedule,
    #[error(transparent)]
    Completion(#[from] CompletionError),
}
