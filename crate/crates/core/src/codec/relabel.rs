use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{prime, CodecError};
use crate::web::{Atom, Pair};

/// Renames every atom `x` to `p_k^(x+1)`, keeping component tags.
pub fn relabel_prime_power(p: &Pair, k: usize) -> Result<Pair, CodecError> {
    let base = BigUint::from(prime(k)?);
    for a in p.atoms() {
        let n = a.as_num().ok_or_else(|| CodecError::NonNumericAtom(a.to_string()))?;
        n.to_u32().filter(|&n| n < u32::MAX).ok_or(CodecError::TooLarge)?;
    }
    Ok(p.map_atoms(|a| {
        let n = a.as_num().and_then(|n| n.to_u32()).expect("checked above");
        Atom { tag: a.tag, id: Atom::num(base.pow(n + 1)).id }
    }))
}
