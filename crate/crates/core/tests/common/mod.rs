#![allow(dead_code)]

use lamweb::lambda::Term;
use lamweb::web::{family, FamilyKind, Pair, Web};
use proptest::prelude::*;

/// Terms whose free de Bruijn indices stay below `depth` binders.
pub fn term_under(depth: usize, size: u32) -> BoxedStrategy<Term> {
    let leaf = if depth == 0 {
        Just(Term::Bottom).boxed()
    } else {
        prop_oneof![4 => (0..depth).prop_map(Term::Var), 1 => Just(Term::Bottom)].boxed()
    };
    if size == 0 {
        return leaf;
    }
    prop_oneof![
        1 => leaf,
        3 => term_under(depth + 1, size - 1).prop_map(Term::lam),
        3 => (term_under(depth, size - 1), term_under(depth, size - 1)).prop_map(|(p, q)| Term::app(p, q)),
    ]
    .boxed()
}

pub fn closed_term(size: u32) -> BoxedStrategy<Term> {
    term_under(0, size)
}

pub fn small_pairs() -> Vec<(String, Pair)> {
    [
        (FamilyKind::Engeler, vec![1]),
        (FamilyKind::Engeler, vec![2]),
        (FamilyKind::Scott, vec![1]),
        (FamilyKind::Scott, vec![2]),
        (FamilyKind::Park, vec![1]),
        (FamilyKind::Park, vec![2]),
        (FamilyKind::Mixed, vec![1, 1]),
    ]
    .into_iter()
    .map(|(k, s)| (format!("{k}:{s:?}"), family(k, &s).unwrap()))
    .collect()
}

pub fn family_web(kind: FamilyKind, sizes: &[usize]) -> Web {
    Web::finite(format!("{kind}"), family(kind, sizes).unwrap())
}
