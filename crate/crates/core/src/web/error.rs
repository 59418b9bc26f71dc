use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("injectivity violation: rows {first} and {second} both map to {value}")]
    Injectivity { first: String, second: String, value: String },
    #[error("atom {0} is not in the carrier")]
    ForeignAtom(String),
    #[error("duplicate row {0}")]
    DuplicateRow(String),
    #[error("family size must be at least 1")]
    ZeroSize,
    #[error("family {kind} expects {expected} size(s), got {got}")]
    FamilyArity { kind: String, expected: usize, got: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{atoms} atoms exceed the search limit of {limit}")]
    SizeLimit { atoms: usize, limit: usize },
    #[error("component {component} is not good: {reason}")]
    NotGood { component: u32, reason: String },
    #[error("no component {0}")]
    NoComponent(u32),
    #[error("line {line}: {msg}")]
    File { line: usize, msg: String },
    #[error("morphism is not total on atom {0}")]
    Partial(String),
}
