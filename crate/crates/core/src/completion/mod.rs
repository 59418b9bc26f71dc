//! The free completion of a partial pair, stratified by rank.

mod element;
mod strata;

use thiserror::Error;

pub use element::{parse_element, PairNode, WebElement};
pub use strata::{
    elements_up_to, extend_morphism, i_apply, restricted_pair, strata, unapply, Budget, Limits,
};

use crate::web::WebError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("rank {rank} exceeds the configured limit {limit}")]
    RankLimit { rank: usize, limit: usize },
    #[error("materialization exceeds {limit} elements")]
    ElementLimit { limit: usize },
    #[error("atom scope of {atoms} atoms exceeds the limit {limit}")]
    ScopeLimit { atoms: usize, limit: usize },
    #[error("atom {0} is outside the web")]
    ForeignAtom(String),
    #[error("web {0} is infinite; give an atom count")]
    ScopeRequired(String),
    #[error("morphism undefined on atom {0}")]
    MorphismDomain(String),
    #[error("bad element `{text}` at column {pos}: {msg}")]
    ElementSyntax { text: String, pos: usize, msg: String },
    #[error(transparent)]
    Web(#[from] WebError),
}
