//! Graph models of the untyped λ-calculus built from partial pairs.

pub mod lambda;
pub mod web;
pub mod completion;
pub mod interp;
pub mod codec;
pub mod theory;
