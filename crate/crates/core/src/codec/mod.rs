//! Effective encodings of pairs, sets, pairs of webs, elements and terms
//! as natural numbers.

mod nat;
mod relabel;
mod term;
mod theta;

use thiserror::Error;

pub use nat::{
    mix_code, mix_decode, pair_code, pair_decode, prime, set_code, set_decode, Code, MAX_SET_BIT,
};
pub use relabel::relabel_prime_power;
pub use term::{decode_term, encode_term};
pub use theta::{theta_decode, theta_encode, ThetaCode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("prime indices start at 1")]
    PrimeIndex,
    #[error("code too large to materialize")]
    TooLarge,
    #[error("atom {0} is not a natural number")]
    NonNumericAtom(String),
    #[error("atom {0} is outside the pair")]
    ForeignAtom(String),
    #[error("{0} is not a valid code")]
    NotACode(String),
}
