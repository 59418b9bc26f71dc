//! Untyped λ-terms with `⊥`: parsing, printing, reduction, head normal forms
//! and Böhm-tree approximants.

mod bohm;
mod builtin;
mod parse;
mod reduce;
mod term;

pub use bohm::{bohm_approximant, BohmTree};
pub use builtin::{builtin, BUILTIN_NAMES};
pub use parse::{parse_closed, parse_term, ParseError};
pub use reduce::{
    eta_normal, has_redex, head_normal_form, hnf_equivalent, normalize, separability_verdict, step, HeadOutcome,
    HeadPosition, Hnf, Normalized, Separability, VarRef,
};
pub use term::{print_term, Term};
