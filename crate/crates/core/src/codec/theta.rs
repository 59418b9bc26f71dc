use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, ToPrimitive};

use super::nat::{is_one, split_power};
use super::{mix_decode, pair_code, prime, Code, CodecError, MAX_SET_BIT};
use crate::completion::{i_apply, WebElement};
use crate::web::{Pair, Web};

/// Bit budget under which `Display` prints a code as a decimal integer.
const PRINT_BITS: u64 = 1 << 14;
/// Largest prime index tried when factoring a code.
const MAX_PRIME_INDEX: usize = 64;

/// The Gödel code of a completion element.
///
/// An atom with index `k` in the pair's carrier has code `2^k`; a fresh
/// element `(a, α)` of rank `n+1` has code `prime(n+2)^≪θ(a), θ(α)≫`. The
/// structure is kept because codes from rank 2 on are too large to write
/// down; two codes are equal exactly when the numbers they denote are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThetaCode {
    Atom(u64),
    Fresh { prime_index: usize, arg: BTreeSet<ThetaCode>, elem: Box<ThetaCode> },
}

impl ThetaCode {
    /// The number denoted, if it has at most `max_bits` bits.
    pub fn value(&self, max_bits: u64) -> Option<Code> {
        match self {
            ThetaCode::Atom(k) => (*k < max_bits).then(|| Code::one() << *k),
            ThetaCode::Fresh { prime_index, arg, elem } => {
                let mut set = Code::default();
                for c in arg {
                    let v = c.value(64)?.to_u64()?;
                    if v >= MAX_SET_BIT.min(max_bits) {
                        return None;
                    }
                    set.set_bit(v, true);
                }
                let exponent = pair_code(&set, &elem.value(max_bits)?).to_u64()?;
                let p = prime(*prime_index).ok()?;
                let bits_per = 64 - p.leading_zeros() as u64;
                if exponent.checked_mul(bits_per)? > max_bits + bits_per {
                    return None;
                }
                let v = Code::from(p).pow(u32::try_from(exponent).ok()?);
                (v.bits() <= max_bits).then_some(v)
            }
        }
    }
}

impl fmt::Display for ThetaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.value(PRINT_BITS) {
            return write!(f, "{v}");
        }
        match self {
            ThetaCode::Atom(k) => write!(f, "2^{k}"),
            ThetaCode::Fresh { prime_index, arg, elem } => {
                let p = prime(*prime_index).expect("index ≥ 1");
                let parts: Vec<String> = arg.iter().map(|c| c.to_string()).collect();
                write!(f, "{p}^<<{{{}}},{elem}>>", parts.join(","))
            }
        }
    }
}

fn atom_index(p: &Pair, e: &WebElement) -> Result<u64, CodecError> {
    let a = e.as_atom().expect("atom");
    p.atoms().iter().position(|b| b == a).map(|i| i as u64).ok_or_else(|| CodecError::ForeignAtom(a.to_string()))
}

/// θ over the completion of the finite pair `p`, whose atoms are numbered
/// in carrier order.
pub fn theta_encode(p: &Pair, e: &WebElement) -> Result<ThetaCode, CodecError> {
    match e.as_pair() {
        None => Ok(ThetaCode::Atom(atom_index(p, e)?)),
        Some((arg, x)) => {
            let arg = arg.iter().map(|y| theta_encode(p, y)).collect::<Result<_, _>>()?;
            Ok(ThetaCode::Fresh { prime_index: e.rank() + 1, arg, elem: Box::new(theta_encode(p, x)?) })
        }
    }
}

/// Inverse of [`theta_encode`] on materialized codes.
pub fn theta_decode(p: &Pair, c: &Code) -> Result<WebElement, CodecError> {
    let bad = || CodecError::NotACode(c.to_string());
    let (twos, rest) = split_power(c, 2);
    if is_one(&rest) {
        let atom = p.atoms().iter().nth(twos as usize).ok_or_else(bad)?;
        return Ok(WebElement::Atom(atom.clone()));
    }
    if twos > 0 {
        return Err(bad());
    }
    for index in 2..=MAX_PRIME_INDEX {
        let q = prime(index)?;
        let (e, rest) = split_power(c, q);
        if e == 0 {
            continue;
        }
        if !is_one(&rest) {
            return Err(bad());
        }
        let (arg_codes, elem_code) = mix_decode(&Code::from(e));
        let arg: BTreeSet<WebElement> = arg_codes.iter().map(|a| theta_decode(p, a)).collect::<Result<_, _>>()?;
        let elem = theta_decode(p, &elem_code)?;
        let web = Web::finite("theta", p.clone());
        let decoded = i_apply(&web, &arg, &elem);
        if decoded.rank() + 1 != index {
            return Err(bad());
        }
        return Ok(decoded);
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{elements_up_to, parse_element, Budget, Limits};
    use crate::web::{family, FamilyKind};

    #[test]
    fn atoms_and_rank_one() {
        let p = family(FamilyKind::Engeler, &[1]).unwrap();
        let a = parse_element("a").unwrap();
        assert_eq!(theta_encode(&p, &a).unwrap().value(64), Some(Code::from(1u32)));
        // ≪{1}, 1≫ = ⟨2, 1⟩ = 7, base prime(2) = 3
        let e = parse_element("({a},a)").unwrap();
        assert_eq!(theta_encode(&p, &e).unwrap().value(64), Some(Code::from(3u32.pow(7))));
        assert_eq!(theta_decode(&p, &Code::from(3u32.pow(7))).unwrap(), e);
    }

    #[test]
    fn round_trip_where_materializable() {
        let p = family(FamilyKind::Engeler, &[1]).unwrap();
        let web = Web::finite("e", p.clone());
        let limits = Limits::default();
        let b = Budget::for_web(&web, None, 2, &limits).unwrap();
        let mut decoded = 0;
        for e in elements_up_to(&web, &b, &limits).unwrap() {
            let code = theta_encode(&p, &e).unwrap();
            if let Some(v) = code.value(1 << 16) {
                assert_eq!(theta_decode(&p, &v).unwrap(), e);
                decoded += 1;
            }
        }
        assert!(decoded >= 4);
    }

    #[test]
    fn rejects_non_codes() {
        let p = family(FamilyKind::Engeler, &[1]).unwrap();
        assert!(theta_decode(&p, &Code::from(6u32)).is_err());
        assert!(theta_decode(&p, &Code::from(4u32)).is_err());
    }
}
