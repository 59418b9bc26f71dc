use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::atom::{atom_name, Atom};
use super::error::WebError;
use super::pair::Pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// empty table
    Engeler,
    /// `j(∅, α) = α`
    Scott,
    /// `j({α}, α) = α`
    Park,
    /// Scott rows on the first part, Park rows on the second
    Mixed,
}

impl FamilyKind {
    pub fn arity(self) -> usize {
        match self {
            FamilyKind::Mixed => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Engeler => "engeler",
            FamilyKind::Scott => "scott",
            FamilyKind::Park => "park",
            FamilyKind::Mixed => "mixed",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = WebError;

    fn from_str(s: &str) -> Result<Self, WebError> {
        match s {
            "engeler" => Ok(FamilyKind::Engeler),
            "scott" => Ok(FamilyKind::Scott),
            "park" => Ok(FamilyKind::Park),
            "mixed" => Ok(FamilyKind::Mixed),
            other => Err(WebError::UnknownFamily(other.to_string())),
        }
    }
}

/// The generating pair of one of the standard graph models. Atoms are named
/// `a`, `b`, `c`, ...; for `mixed` the Scott part comes first.
pub fn family(kind: FamilyKind, sizes: &[usize]) -> Result<Pair, WebError> {
    if sizes.len() != kind.arity() {
        return Err(WebError::FamilyArity { kind: kind.to_string(), expected: kind.arity(), got: sizes.len() });
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(WebError::ZeroSize);
    }
    let total: usize = sizes.iter().sum();
    let atoms: Vec<Atom> = (0..total).map(|i| Atom::named(&atom_name(i))).collect();
    let scott = |a: &Atom| ((BTreeSet::new(), a.clone()), a.clone());
    let park = |a: &Atom| ((BTreeSet::from([a.clone()]), a.clone()), a.clone());
    let rows: Vec<_> = match kind {
        FamilyKind::Engeler => vec![],
        FamilyKind::Scott => atoms.iter().map(scott).collect(),
        FamilyKind::Park => atoms.iter().map(park).collect(),
        FamilyKind::Mixed => {
            let (q, r) = atoms.split_at(sizes[0]);
            q.iter().map(scott).chain(r.iter().map(park)).collect()
        }
    };
    Pair::new(atoms, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn park_one() {
        let p = family(FamilyKind::Park, &[1]).unwrap();
        assert_eq!(p.to_string(), "atoms: a\nrow: {a} a -> a");
    }

    #[test]
    fn mixed_two_two() {
        let p = family(FamilyKind::Mixed, &[2, 2]).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.to_string(), "atoms: a b c d\nrow: {} a -> a\nrow: {} b -> b\nrow: {c} c -> c\nrow: {d} d -> d");
    }

    #[test]
    fn engeler_three() {
        let p = family(FamilyKind::Engeler, &[3]).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.table_len(), 0);
    }

    #[test]
    fn bad_sizes() {
        assert_eq!(family(FamilyKind::Park, &[0]), Err(WebError::ZeroSize));
        assert!(matches!(family(FamilyKind::Mixed, &[2]), Err(WebError::FamilyArity { .. })));
        assert!(matches!(family(FamilyKind::Mixed, &[2, 0]), Err(WebError::ZeroSize)));
    }
}
