use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use super::CodecError;

pub type Code = BigUint;

/// Cantor pairing `(m+n)(m+n+1)/2 + n`.
pub fn pair_code(m: &Code, n: &Code) -> Code {
    let s = m + n;
    (&s * (&s + 1u32) >> 1) + n
}

pub fn pair_decode(c: &Code) -> (Code, Code) {
    // w = floor((sqrt(8c + 1) - 1) / 2)
    let disc: Code = (c << 3u32) + 1u32;
    let w: Code = (Roots::sqrt(&disc) - 1u32) >> 1;
    let t = (&w * (&w + 1u32)) >> 1;
    let n = c - t;
    let m = &w - &n;
    (m, n)
}

/// `Σ 2^x` over the set.
pub fn set_code(s: &BTreeSet<Code>) -> Result<Code, CodecError> {
    let mut out = Code::zero();
    for x in s {
        let bit = x.to_u64().filter(|&b| b < MAX_SET_BIT).ok_or(CodecError::TooLarge)?;
        out.set_bit(bit, true);
    }
    Ok(out)
}

/// Largest element a materialized set code may contain.
pub const MAX_SET_BIT: u64 = 1 << 32;

pub fn set_decode(c: &Code) -> BTreeSet<Code> {
    (0..c.bits()).filter(|&i| c.bit(i)).map(Code::from).collect()
}

/// `≪a, n≫ = ⟨#*(a), n⟩`
pub fn mix_code(a: &BTreeSet<Code>, n: &Code) -> Result<Code, CodecError> {
    Ok(pair_code(&set_code(a)?, n))
}

pub fn mix_decode(c: &Code) -> (BTreeSet<Code>, Code) {
    let (s, n) = pair_decode(c);
    (set_decode(&s), n)
}

/// The `k`-th prime, `p₁ = 2`.
pub fn prime(k: usize) -> Result<u64, CodecError> {
    if k == 0 {
        return Err(CodecError::PrimeIndex);
    }
    let mut found = 0;
    let mut n = 1u64;
    while found < k {
        n += 1;
        if is_prime(n) {
            found += 1;
        }
    }
    Ok(n)
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(e, r)` with `c = p^e · r` and `p ∤ r`.
pub(crate) fn split_power(c: &Code, p: u64) -> (u64, Code) {
    let mut e = 0;
    let mut r = c.clone();
    let p = Code::from(p);
    while !r.is_zero() && (&r % &p).is_zero() {
        r /= &p;
        e += 1;
    }
    (e, r)
}

pub(crate) fn is_one(c: &Code) -> bool {
    c.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u64) -> Code {
        Code::from(n)
    }

    #[test]
    fn cantor_values() {
        assert_eq!(pair_code(&c(0), &c(0)), c(0));
        assert_eq!(pair_code(&c(1), &c(0)), c(1));
        assert_eq!(pair_code(&c(0), &c(1)), c(2));
        assert_eq!(pair_decode(&pair_code(&c(7), &c(9))), (c(7), c(9)));
        for k in 0..200u64 {
            let (m, n) = pair_decode(&c(k));
            assert_eq!(pair_code(&m, &n), c(k));
        }
    }

    #[test]
    fn set_and_mix_values() {
        assert_eq!(set_code(&BTreeSet::new()).unwrap(), c(0));
        assert_eq!(set_code(&BTreeSet::from([c(0), c(2)])).unwrap(), c(5));
        assert_eq!(set_decode(&set_code(&BTreeSet::from([c(3), c(1), c(4)])).unwrap()), BTreeSet::from([c(1), c(3), c(4)]));
        assert_eq!(mix_code(&BTreeSet::new(), &c(0)).unwrap(), c(0));
        assert_eq!(mix_code(&BTreeSet::from([c(0)]), &c(0)).unwrap(), c(1));
    }

    #[test]
    fn primes() {
        assert_eq!(prime(1), Ok(2));
        assert_eq!(prime(4), Ok(7));
        assert_eq!(prime(10), Ok(29));
        assert_eq!(prime(0), Err(CodecError::PrimeIndex));
    }
}
