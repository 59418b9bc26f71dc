//! Order-theoretic comparisons of terms in graph models, with certified
//! refutations, and the effective prefixes of the minimum model.

mod enumerate;
mod fingerprint;
mod glued;
mod verdict;

use thiserror::Error;

pub use enumerate::{enumerate_finite_pairs, min_model_prefix, ENUMERATION_MAX_ATOMS};
pub use fingerprint::{corpus_inequations, default_corpus, fingerprint, fingerprints, TheoryFingerprint};
pub use glued::{component_restriction_check, retract_transport_check};
pub use verdict::{check_equation, check_inequation, observation_set, CheckConfig, Verdict};

use crate::codec::CodecError;
use crate::completion::CompletionError;
use crate::interp::InterpError;
use crate::web::WebError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("term {0} is not closed")]
    NotClosed(String),
    #[error("empty budget schedule")]
    EmptySchedule,
    #[error("enumeration covers pairs with at most {max_atoms} atoms ({available} pairs); {requested} requested")]
    EnumerationLimit { requested: usize, available: usize, max_atoms: usize },
    #[error("a model prefix needs at least one component")]
    EmptyPrefix,
    #[error("web {0} is not a finite gluing")]
    NotFinite(String),
    #[error("expected a certified refutation")]
    NotCertified,
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Web(#[from] WebError),
}
