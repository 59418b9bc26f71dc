use std::collections::{BTreeMap, BTreeSet};

use super::atom::Atom;
use super::error::WebError;
use super::morphism::PairMorphism;
use super::pair::Pair;

/// Disjoint union; the atoms of the `k`-th pair (1-based) get tag `k`.
pub fn glue(pairs: &[Pair]) -> Pair {
    let mut atoms = Vec::new();
    let mut rows = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        let tag = i as u32 + 1;
        let q = p.map_atoms(|a| a.retag(tag));
        atoms.extend(q.atoms().iter().cloned());
        rows.extend(q.rows().map(|(k, v)| (k.clone(), v.clone())));
    }
    Pair::new(atoms, rows).expect("tags make the components disjoint")
}

/// Component tags present in a glued pair, in increasing order.
pub fn component_tags(p: &Pair) -> Vec<u32> {
    let tags: BTreeSet<u32> = p.atoms().iter().map(|a| a.tag).collect();
    tags.into_iter().collect()
}

/// The subpair formed by the atoms tagged `tag`.
pub fn component(p: &Pair, tag: u32) -> Result<Pair, WebError> {
    let keep: BTreeSet<Atom> = p.atoms().iter().filter(|a| a.tag == tag).cloned().collect();
    if keep.is_empty() {
        return Err(WebError::NoComponent(tag));
    }
    Ok(p.restrict(&keep))
}

/// `j({α}, α) = α`
pub fn is_isolated(p: &Pair, alpha: &Atom) -> bool {
    p.apply(&BTreeSet::from([alpha.clone()]), alpha) == Some(alpha)
}

/// `(∅, α) ∈ dom(j)`
pub fn is_critical(p: &Pair, alpha: &Atom) -> bool {
    p.apply(&BTreeSet::new(), alpha).is_some()
}

/// At least one isolated element and no critical element.
pub fn is_good(p: &Pair) -> bool {
    p.atoms().iter().any(|a| is_isolated(p, a)) && !p.atoms().iter().any(|a| is_critical(p, a))
}

fn good_reason(p: &Pair) -> Option<String> {
    if let Some(a) = p.atoms().iter().find(|a| is_critical(p, a)) {
        return Some(format!("{a} is critical"));
    }
    if !p.atoms().iter().any(|a| is_isolated(p, a)) {
        return Some("no isolated element".into());
    }
    None
}

/// Embedding `e` of component `n` into the gluing and the retraction `π`
/// collapsing every foreign atom onto the least isolated atom of component
/// `n`. Both are returned as maps; `e` has the component as source.
pub fn retraction_maps(glued: &Pair, n: u32) -> Result<(PairMorphism<Atom>, PairMorphism<Atom>), WebError> {
    let target = component(glued, n)?;
    for tag in component_tags(glued) {
        let c = component(glued, tag)?;
        if let Some(reason) = good_reason(&c) {
            return Err(WebError::NotGood { component: tag, reason });
        }
    }
    let alpha = target
        .atoms()
        .iter()
        .find(|a| is_isolated(&target, a))
        .cloned()
        .expect("good component has an isolated atom");
    let e = PairMorphism::identity(target.atoms());
    let pi: BTreeMap<Atom, Atom> = glued
        .atoms()
        .iter()
        .map(|a| (a.clone(), if a.tag == n { a.clone() } else { alpha.clone() }))
        .collect();
    Ok((e, PairMorphism::new(pi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::{check_morphism, family, iso_finite_pairs, FamilyKind, IsoResult, SEARCH_LIMIT};

    fn fam(kind: FamilyKind, n: usize) -> Pair {
        family(kind, &[n]).unwrap()
    }

    #[test]
    fn gluing_examples() {
        let single = glue(&[fam(FamilyKind::Engeler, 1)]);
        assert_eq!(single.to_string(), "atoms: a#1");
        let sp = glue(&[fam(FamilyKind::Scott, 1), fam(FamilyKind::Park, 1)]);
        assert_eq!(sp.to_string(), "atoms: a#1 a#2\nrow: {} a#1 -> a#1\nrow: {a#2} a#2 -> a#2");
        let pp = glue(&[fam(FamilyKind::Park, 1), fam(FamilyKind::Park, 1)]);
        assert_eq!(component_tags(&pp), vec![1, 2]);
        assert_eq!(pp.table_len(), 2);
    }

    #[test]
    fn good_pairs() {
        let park = fam(FamilyKind::Park, 1);
        let a = Atom::named("a");
        assert!(is_isolated(&park, &a) && !is_critical(&park, &a) && is_good(&park));
        let scott = fam(FamilyKind::Scott, 1);
        assert!(is_critical(&scott, &a) && !is_good(&scott));
        assert!(is_good(&glue(&[park.clone(), park])));
        assert!(!is_good(&fam(FamilyKind::Engeler, 1)));
    }

    #[test]
    fn retraction_of_two_park_copies() {
        let glued = glue(&[fam(FamilyKind::Park, 1), fam(FamilyKind::Park, 1)]);
        let (e, pi) = retraction_maps(&glued, 1).unwrap();
        let p = Atom::named("a").retag(1);
        let q = Atom::named("a").retag(2);
        assert_eq!(pi.apply(&q), Some(&p));
        assert_eq!(pi.apply(&p), Some(&p));
        let comp = component(&glued, 1).unwrap();
        assert!(check_morphism(&e, &comp, &glued));
        assert!(check_morphism(&pi, &glued, &comp));
        assert_eq!(pi.after(&e), PairMorphism::identity(comp.atoms()));
    }

    #[test]
    fn retraction_needs_good_components() {
        let glued = glue(&[fam(FamilyKind::Scott, 1), fam(FamilyKind::Park, 1)]);
        assert!(matches!(retraction_maps(&glued, 2), Err(WebError::NotGood { component: 1, .. })));
        let single = glue(&[fam(FamilyKind::Park, 1)]);
        let (e, pi) = retraction_maps(&single, 1).unwrap();
        assert_eq!(e, pi);
    }

    #[test]
    fn glue_commutes_up_to_iso() {
        let s = fam(FamilyKind::Scott, 1);
        let p = fam(FamilyKind::Park, 2);
        let ab = glue(&[s.clone(), p.clone()]);
        let ba = glue(&[p, s]);
        assert!(matches!(iso_finite_pairs(&ab, &ba, SEARCH_LIMIT).unwrap(), IsoResult::Iso(_)));
    }
}
