use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::error::WebError;
use super::pair::FinitePair;

/// Default bound on carrier size for automorphism and isomorphism search.
pub const SEARCH_LIMIT: usize = 8;

/// A map between carriers; whether it is a morphism is checked against a
/// source and a target with [`check_morphism`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMorphism<A: Ord> {
    pub map: BTreeMap<A, A>,
}

impl<A: Ord + Clone + fmt::Display> PairMorphism<A> {
    pub fn new(map: BTreeMap<A, A>) -> Self {
        PairMorphism { map }
    }

    pub fn identity<'a>(atoms: impl IntoIterator<Item = &'a A>) -> Self
    where
        A: 'a,
    {
        PairMorphism { map: atoms.into_iter().map(|a| (a.clone(), a.clone())).collect() }
    }

    pub fn apply(&self, a: &A) -> Option<&A> {
        self.map.get(a)
    }

    /// `θ⁺`, the pointwise image of a set.
    pub fn apply_set(&self, s: &BTreeSet<A>) -> Option<BTreeSet<A>> {
        s.iter().map(|x| self.map.get(x).cloned()).collect()
    }

    /// `self ∘ first`
    pub fn after(&self, first: &PairMorphism<A>) -> PairMorphism<A> {
        PairMorphism {
            map: first
                .map
                .iter()
                .filter_map(|(k, v)| self.map.get(v).map(|w| (k.clone(), w.clone())))
                .collect(),
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<PairMorphism<A>> {
        let map: BTreeMap<A, A> = self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        (map.len() == self.map.len()).then_some(PairMorphism { map })
    }
}

impl<A: Ord + fmt::Display> fmt::Display for PairMorphism<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|(k, v)| format!("{k}->{v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// θ is total on the source carrier, lands in the target carrier, and
/// `θ(j_src(a,α)) = j_tgt(θ⁺(a), θ(α))` for every source row.
pub fn check_morphism<A: Ord + Clone + fmt::Display>(
    theta: &PairMorphism<A>,
    src: &FinitePair<A>,
    tgt: &FinitePair<A>,
) -> bool {
    let total = src.atoms().iter().all(|a| theta.apply(a).is_some_and(|b| tgt.contains(b)));
    total
        && src.rows().all(|((a, x), v)| {
            let a2 = theta.apply_set(a).expect("total");
            let x2 = theta.apply(x).expect("total");
            tgt.apply(&a2, x2) == theta.apply(v)
        })
}

/// Rows whose atoms are all assigned must map to rows.
fn consistent<A: Ord + Clone + fmt::Display>(
    assign: &BTreeMap<A, A>,
    src: &FinitePair<A>,
    tgt: &FinitePair<A>,
) -> bool {
    src.rows().all(|((a, x), v)| {
        let mapped: Option<BTreeSet<A>> = a.iter().map(|y| assign.get(y).cloned()).collect();
        match (mapped, assign.get(x), assign.get(v)) {
            (Some(a2), Some(x2), Some(v2)) => tgt.apply(&a2, x2) == Some(v2),
            _ => true,
        }
    })
}

/// All bijections `src → tgt` that are isomorphisms, in canonical order,
/// stopping after `max` hits.
fn isomorphisms<A: Ord + Clone + fmt::Display>(
    src: &FinitePair<A>,
    tgt: &FinitePair<A>,
    max: usize,
) -> Vec<PairMorphism<A>> {
    let mut out = Vec::new();
    if src.len() != tgt.len() || src.table_len() != tgt.table_len() {
        return out;
    }
    let from: Vec<A> = src.atoms().iter().cloned().collect();
    let to: Vec<A> = tgt.atoms().iter().cloned().collect();
    let mut used = vec![false; to.len()];
    let mut assign = BTreeMap::new();
    search(&from, &to, 0, &mut used, &mut assign, src, tgt, max, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn search<A: Ord + Clone + fmt::Display>(
    from: &[A],
    to: &[A],
    i: usize,
    used: &mut [bool],
    assign: &mut BTreeMap<A, A>,
    src: &FinitePair<A>,
    tgt: &FinitePair<A>,
    max: usize,
    out: &mut Vec<PairMorphism<A>>,
) {
    if out.len() >= max {
        return;
    }
    if i == from.len() {
        let theta = PairMorphism::new(assign.clone());
        let inv = theta.inverse().expect("bijection");
        // equal table sizes make the inverse check redundant, but it is cheap
        if check_morphism(&theta, src, tgt) && check_morphism(&inv, tgt, src) {
            out.push(theta);
        }
        return;
    }
    for j in 0..to.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        assign.insert(from[i].clone(), to[j].clone());
        if consistent(assign, src, tgt) {
            search(from, to, i + 1, used, assign, src, tgt, max, out);
        }
        assign.remove(&from[i]);
        used[j] = false;
    }
}

fn check_limit<A: Ord + Clone + fmt::Display>(p: &FinitePair<A>, limit: usize) -> Result<(), WebError> {
    if p.len() > limit {
        Err(WebError::SizeLimit { atoms: p.len(), limit })
    } else {
        Ok(())
    }
}

/// The automorphism group, identity first.
pub fn automorphisms<A: Ord + Clone + fmt::Display>(
    p: &FinitePair<A>,
    limit: usize,
) -> Result<Vec<PairMorphism<A>>, WebError> {
    check_limit(p, limit)?;
    Ok(isomorphisms(p, p, usize::MAX))
}

/// Orbits of the automorphism group, each sorted, listed by least element.
pub fn orbits<A: Ord + Clone + fmt::Display>(p: &FinitePair<A>, limit: usize) -> Result<Vec<Vec<A>>, WebError> {
    let auts = automorphisms(p, limit)?;
    Ok(orbits_of(p, &auts))
}

pub(crate) fn orbits_of<A: Ord + Clone + fmt::Display>(p: &FinitePair<A>, auts: &[PairMorphism<A>]) -> Vec<Vec<A>> {
    let atoms: Vec<A> = p.atoms().iter().cloned().collect();
    let index: BTreeMap<&A, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut parent: Vec<usize> = (0..atoms.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for theta in auts {
        for (k, v) in &theta.map {
            let (x, y) = (find(&mut parent, index[k]), find(&mut parent, index[v]));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<A>> = BTreeMap::new();
    for i in 0..atoms.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(atoms[i].clone());
    }
    blocks.into_values().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult<A: Ord> {
    Iso(PairMorphism<A>),
    NotIsomorphic,
}

/// First isomorphism in canonical order, or exhaustion.
pub fn iso_finite_pairs<A: Ord + Clone + fmt::Display>(
    a: &FinitePair<A>,
    b: &FinitePair<A>,
    limit: usize,
) -> Result<IsoResult<A>, WebError> {
    check_limit(a, limit)?;
    check_limit(b, limit)?;
    Ok(match isomorphisms(a, b, 1).pop() {
        Some(theta) => IsoResult::Iso(theta),
        None => IsoResult::NotIsomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::{family, Atom, FamilyKind, Pair};

    fn fam(kind: FamilyKind, sizes: &[usize]) -> Pair {
        family(kind, sizes).unwrap()
    }

    #[test]
    fn engeler_three_has_all_permutations() {
        assert_eq!(automorphisms(&fam(FamilyKind::Engeler, &[3]), SEARCH_LIMIT).unwrap().len(), 6);
    }

    #[test]
    fn mixed_has_four_automorphisms_and_two_orbits() {
        let p = fam(FamilyKind::Mixed, &[2, 2]);
        assert_eq!(automorphisms(&p, SEARCH_LIMIT).unwrap().len(), 4);
        assert_eq!(orbits(&p, SEARCH_LIMIT).unwrap().len(), 2);
    }

    #[test]
    fn park_one_is_rigid() {
        let p = fam(FamilyKind::Park, &[1]);
        let auts = automorphisms(&p, SEARCH_LIMIT).unwrap();
        assert_eq!(auts, vec![PairMorphism::identity(p.atoms())]);
        assert_eq!(orbits(&p, SEARCH_LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn engeler_five_single_orbit() {
        assert_eq!(orbits(&fam(FamilyKind::Engeler, &[5]), SEARCH_LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn size_limit() {
        let p = fam(FamilyKind::Engeler, &[9]);
        assert_eq!(automorphisms(&p, SEARCH_LIMIT), Err(WebError::SizeLimit { atoms: 9, limit: 8 }));
    }

    #[test]
    fn collapsing_map_example() {
        let park = fam(FamilyKind::Park, &[1]);
        let a = Atom::named("a");
        let b = Atom::named("b");
        let collapse = PairMorphism::new([(a.clone(), a.clone()), (b.clone(), a.clone())].into());
        let bare = Pair::new([a.clone(), b.clone()], park.rows().map(|(k, v)| (k.clone(), v.clone()))).unwrap();
        assert!(check_morphism(&collapse, &bare, &park));
        let scott_b = Pair::new(
            [a.clone(), b.clone()],
            park.rows()
                .map(|(k, v)| (k.clone(), v.clone()))
                .chain([((BTreeSet::new(), b.clone()), b.clone())]),
        )
        .unwrap();
        assert!(!check_morphism(&collapse, &scott_b, &park));
    }

    #[test]
    fn isomorphism_examples() {
        let park = fam(FamilyKind::Park, &[1]);
        let renamed = park.map_atoms(|_| Atom::named("q"));
        assert!(matches!(iso_finite_pairs(&park, &renamed, SEARCH_LIMIT).unwrap(), IsoResult::Iso(_)));
        let scott = fam(FamilyKind::Scott, &[1]);
        assert_eq!(iso_finite_pairs(&park, &scott, SEARCH_LIMIT).unwrap(), IsoResult::NotIsomorphic);
        let e2 = fam(FamilyKind::Engeler, &[2]);
        match iso_finite_pairs(&e2, &e2, SEARCH_LIMIT).unwrap() {
            IsoResult::Iso(theta) => assert_eq!(theta, PairMorphism::identity(e2.atoms())),
            other => panic!("{other:?}"),
        }
    }
}
