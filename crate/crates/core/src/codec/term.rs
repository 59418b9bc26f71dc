use num_traits::{ToPrimitive, Zero};

use super::{pair_code, pair_decode, Code, CodecError};
use crate::lambda::Term;

/// `Var i ↦ ⟨0,i⟩`, `App ↦ ⟨1,⟨c₁,c₂⟩⟩`, `Lam ↦ ⟨2,c⟩`, `⊥ ↦ ⟨3,0⟩`,
/// `Free x ↦ ⟨4, bytes of x⟩`.
pub fn encode_term(t: &Term) -> Code {
    let tagged = |tag: u32, c: Code| pair_code(&Code::from(tag), &c);
    match t {
        Term::Var(i) => tagged(0, Code::from(*i)),
        Term::App(p, q) => tagged(1, pair_code(&encode_term(p), &encode_term(q))),
        Term::Lam(b) => tagged(2, encode_term(b)),
        Term::Bottom => tagged(3, Code::zero()),
        Term::Free(name) => tagged(4, Code::from_bytes_be(name.as_bytes())),
    }
}

pub fn decode_term(c: &Code) -> Result<Term, CodecError> {
    let bad = || CodecError::NotACode(c.to_string());
    let (tag, body) = pair_decode(c);
    match tag.to_u32() {
        Some(0) => Ok(Term::Var(body.to_usize().ok_or_else(bad)?)),
        Some(1) => {
            let (p, q) = pair_decode(&body);
            Ok(Term::app(decode_term(&p)?, decode_term(&q)?))
        }
        Some(2) => Ok(Term::lam(decode_term(&body)?)),
        Some(3) if body.is_zero() => Ok(Term::Bottom),
        Some(4) if !body.is_zero() => {
            let name = String::from_utf8(body.to_bytes_be()).map_err(|_| bad())?;
            Ok(Term::free(&name))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{builtin, parse_term, BUILTIN_NAMES};

    #[test]
    fn builtins_round_trip() {
        assert_eq!(encode_term(&Term::Var(0)), Code::zero());
        for name in BUILTIN_NAMES {
            let t = builtin(name).unwrap();
            assert_eq!(decode_term(&encode_term(&t)).unwrap(), t);
        }
        let t = parse_term("\\x.x y").unwrap();
        assert_eq!(decode_term(&encode_term(&t)).unwrap(), t);
    }

    #[test]
    fn malformed_codes() {
        let bottom_with_payload = pair_code(&Code::from(3u32), &Code::from(1u32));
        assert!(decode_term(&bottom_with_payload).is_err());
        assert!(decode_term(&pair_code(&Code::from(9u32), &Code::zero())).is_err());
    }
}
