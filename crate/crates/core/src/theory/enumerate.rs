use std::collections::BTreeSet;

use super::TheoryError;
use crate::codec::{mix_code, pair_code, relabel_prime_power, Code};
use crate::web::{glue, Atom, Key, Pair, Web};

/// Pairs are enumerated over carriers of at most this many atoms.
pub const ENUMERATION_MAX_ATOMS: usize = 3;

type Row = (Key<usize>, usize);

/// `⟨≪a, α≫, value⟩`
fn row_code(((a, x), v): &Row) -> Code {
    let a: BTreeSet<Code> = a.iter().map(|&i| Code::from(i)).collect();
    pair_code(&mix_code(&a, &Code::from(*x)).expect("small atoms"), &Code::from(*v))
}

/// Every partial injection from `keys` to `0..n`, as row lists.
fn tables(keys: &[Key<usize>], n: usize) -> Vec<Vec<Row>> {
    fn go(keys: &[Key<usize>], n: usize, used: &mut Vec<bool>, cur: &mut Vec<Row>, out: &mut Vec<Vec<Row>>) {
        let Some((k, rest)) = keys.split_first() else {
            out.push(cur.clone());
            return;
        };
        go(rest, n, used, cur, out);
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push((k.clone(), v));
                go(rest, n, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(keys, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

fn pairs_with(n: usize) -> Vec<Vec<Row>> {
    let mut keys = Vec::new();
    for mask in 0u32..(1 << n) {
        let a: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        for x in 0..n {
            keys.push((a.clone(), x));
        }
    }
    let mut all: Vec<(usize, Vec<Code>, Vec<Row>)> = tables(&keys, n)
        .into_iter()
        .map(|rows| {
            let mut codes: Vec<Code> = rows.iter().map(row_code).collect();
            codes.sort();
            (rows.len(), codes, rows)
        })
        .collect();
    all.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    all.into_iter().map(|(_, _, rows)| rows).collect()
}

/// The first `count` finite pairs over carriers `{0, …, n-1}`, ordered by
/// carrier size, table size and sorted row codes.
pub fn enumerate_finite_pairs(count: usize) -> Result<Vec<Pair>, TheoryError> {
    let mut out = Vec::new();
    let mut available = 0;
    for n in 1..=ENUMERATION_MAX_ATOMS {
        if out.len() >= count {
            break;
        }
        let batch = pairs_with(n);
        available += batch.len();
        for rows in batch.into_iter().take(count - out.len()) {
            let atoms = (0..n).map(Atom::num);
            let rows = rows.into_iter().map(|((a, x), v)| {
                ((a.into_iter().map(Atom::num).collect(), Atom::num(x)), Atom::num(v))
            });
            out.push(Pair::new(atoms, rows).expect("enumerated tables are injective"));
        }
    }
    if out.len() < count {
        return Err(TheoryError::EnumerationLimit { requested: count, available, max_atoms: ENUMERATION_MAX_ATOMS });
    }
    Ok(out)
}

/// The gluing of the first `m` enumerated pairs, the `k`-th relabelled by
/// `x ↦ p_k^(x+1)` and tagged `k`.
pub fn min_model_prefix(m: usize) -> Result<Web, TheoryError> {
    if m == 0 {
        return Err(TheoryError::EmptyPrefix);
    }
    let parts = enumerate_finite_pairs(m)?
        .iter()
        .enumerate()
        .map(|(i, p)| relabel_prime_power(p, i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Web::finite(format!("minmodel:{m}"), glue(&parts)))
}
