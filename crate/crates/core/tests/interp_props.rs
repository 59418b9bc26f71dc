mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{closed_term, family_web, small_pairs};
use lamweb::completion::{elements_up_to, restricted_pair, Budget, Limits, WebElement};
use lamweb::interp::{
    decide_member_normal, default_schedule, extract_witness_subpair, interp_finite, interp_slice, member_semi, Env,
    InterpError,
};
use lamweb::lambda::{builtin, parse_term, Term};
use lamweb::web::{check_morphism, FamilyKind, PairMorphism, Web};
use proptest::prelude::*;

fn webs() -> Vec<Web> {
    vec![
        family_web(FamilyKind::Engeler, &[1]),
        family_web(FamilyKind::Scott, &[1]),
        family_web(FamilyKind::Park, &[1]),
        family_web(FamilyKind::Mixed, &[1, 1]),
    ]
}

fn budget(w: &Web, rank: usize) -> Budget {
    Budget::for_web(w, None, rank, &Limits::default()).unwrap()
}

fn slice(w: &Web, t: &Term, env: &Env<WebElement>, rank: usize) -> BTreeSet<WebElement> {
    interp_slice(w, t, env, &budget(w, rank), &Limits::default()).unwrap().elements
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_agrees_with_materialized_pair(t in closed_term(5), wi in 0usize..4, rank in 0usize..=2, pick in any::<u16>()) {
        let w = &webs()[wi];
        // mixed(1,1) has 2048 elements at rank 2, too many for the eager oracle
        let rank = if wi == 3 { rank.min(1) } else { rank };
        let limits = Limits::default();
        let b = budget(w, rank);
        let carrier = elements_up_to(w, &b, &limits).unwrap();
        let z: BTreeSet<WebElement> =
            carrier.iter().enumerate().filter(|(i, _)| (pick >> (i % 16)) & 1 == 1).map(|(_, e)| e.clone()).collect();
        let env = Env::empty().with("z", z);
        let t = Term::app(t, Term::free("z"));
        let pair = restricted_pair(w, &b, &limits).unwrap();
        prop_assert_eq!(slice(w, &t, &env, rank), interp_finite(&pair, &t, &env).unwrap());
    }

    #[test]
    fn slices_grow_with_the_budget(t in closed_term(6), wi in 0usize..4) {
        let w = &webs()[wi];
        let mut prev = BTreeSet::new();
        for rank in 0..=3 {
            let limits = Limits::default();
            let next = match interp_slice(w, &t, &Env::empty(), &budget(w, rank), &limits) {
                Ok(s) => s.elements,
                Err(InterpError::SubsetLimit { .. }) => break,
                Err(e) => panic!("{e}"),
            };
            prop_assert!(prev.is_subset(&next));
            prev = next;
        }
    }

    #[test]
    fn witnesses_are_sound(t in closed_term(5), wi in 0usize..4, rank in 1usize..=2) {
        let w = &webs()[wi];
        let limits = Limits::default();
        let b = budget(w, rank);
        for x in slice(w, &t, &Env::empty(), rank).into_iter().take(4) {
            let pair = extract_witness_subpair(w, &t, &Env::empty(), &x, &b, &limits).unwrap();
            prop_assert!(interp_finite(&pair, &t, &Env::empty()).unwrap().contains(&x));
        }
    }
}

#[test]
fn decision_agrees_with_semi_decision() {
    let limits = Limits::default();
    let mut terms: Vec<Term> = ["I", "T", "F", "One", "Delta", "S"].iter().map(|n| builtin(n).unwrap()).collect();
    for src in ["\\x.x x x", "\\x y.y x", "\\x.x (\\y.y) x", "\\f x.f (f x)"] {
        terms.push(parse_term(src).unwrap());
    }
    for w in webs() {
        let schedule = default_schedule(&w, None, 4, &limits).unwrap();
        let elements = elements_up_to(&w, &budget(&w, 2), &limits).unwrap();
        for t in &terms {
            for x in &elements {
                let decided = decide_member_normal(&w, x, t, &Env::empty(), 100).unwrap();
                let found = member_semi(&w, x, t, &Env::empty(), &schedule, &limits).unwrap().is_found();
                assert_eq!(decided, found, "{} {x} {t}", w.name());
            }
        }
    }
}

/// Every map between two small family pairs that is a morphism.
fn morphisms() -> Vec<(usize, usize, PairMorphism<lamweb::web::Atom>)> {
    let pairs = small_pairs();
    let mut out = Vec::new();
    for (si, (_, src)) in pairs.iter().enumerate() {
        for (ti, (_, tgt)) in pairs.iter().enumerate() {
            let dom: Vec<_> = src.atoms().iter().cloned().collect();
            let cod: Vec<_> = tgt.atoms().iter().cloned().collect();
            let total = cod.len().pow(dom.len() as u32);
            for code in 0..total {
                let mut c = code;
                let mut map = BTreeMap::new();
                for a in &dom {
                    map.insert(a.clone(), cod[c % cod.len()].clone());
                    c /= cod.len();
                }
                let theta = PairMorphism::new(map);
                if check_morphism(&theta, src, tgt) {
                    out.push((si, ti, theta));
                }
            }
        }
    }
    out
}

#[test]
fn morphisms_map_interpretations_into_interpretations() {
    let pairs = small_pairs();
    let all = morphisms();
    assert!(all.len() >= 20);
    let terms: Vec<Term> = ["I", "T", "F", "One", "Delta", "Omega", "Omega3", "S"]
        .iter()
        .map(|n| builtin(n).unwrap())
        .chain(["z", "z z", "\\x.z x", "(\\x.x x) z"].iter().map(|s| parse_term(s).unwrap()))
        .collect();
    let step = all.len() / 20;
    for (si, ti, theta) in all.iter().step_by(step.max(1)).take(20) {
        let (src, tgt) = (&pairs[*si].1, &pairs[*ti].1);
        let z: BTreeSet<_> = src.atoms().iter().take(1).cloned().collect();
        let env = Env::empty().with("z", z.clone());
        let env2 = Env::empty().with("z", theta.apply_set(&z).unwrap());
        let iso = src.len() == tgt.len() && theta.inverse().is_some_and(|inv| check_morphism(&inv, tgt, src));
        for t in &terms {
            let image = theta.apply_set(&interp_finite(src, t, &env).unwrap()).unwrap();
            let target = interp_finite(tgt, t, &env2).unwrap();
            assert!(image.is_subset(&target), "{} -> {} {t}", pairs[*si].0, pairs[*ti].0);
            if iso {
                assert_eq!(image, target);
            }
        }
    }
}
