use std::collections::BTreeSet;

use lamweb::completion::{parse_element, Budget, Limits, WebElement};
use lamweb::interp::{
    decide_member_normal, default_schedule, extract_witness_subpair, interp_finite, interp_slice, member_semi,
    omega_characterization_check, Env, InterpError, MemberOutcome,
};
use lamweb::lambda::{builtin, parse_term, Term};
use lamweb::web::{family, FamilyKind, Web};

fn web(kind: FamilyKind, sizes: &[usize]) -> Web {
    Web::finite(format!("{kind}"), family(kind, sizes).unwrap())
}

fn el(s: &str) -> WebElement {
    parse_element(s).unwrap()
}

fn b(t: &str) -> Term {
    builtin(t).unwrap()
}

fn slice(w: &Web, t: &Term, rank: usize) -> BTreeSet<WebElement> {
    let limits = Limits::default();
    let budget = Budget::for_web(w, None, rank, &limits).unwrap();
    interp_slice(w, t, &Env::empty(), &budget, &limits).unwrap().elements
}

fn semi(w: &Web, x: &str, t: &Term) -> MemberOutcome {
    let limits = Limits::default();
    let schedule = default_schedule(w, None, 4, &limits).unwrap();
    member_semi(w, &el(x), t, &Env::empty(), &schedule, &limits).unwrap()
}

#[test]
fn slices_of_basic_terms() {
    let engeler = web(FamilyKind::Engeler, &[1]);
    for rank in 0..=4 {
        assert!(slice(&engeler, &b("Omega"), rank).is_empty());
    }
    assert_eq!(slice(&engeler, &b("I"), 1), BTreeSet::from([el("({a},a)")]));
    let park = slice(&web(FamilyKind::Park, &[1]), &b("Omega"), 2);
    assert!(park.contains(&el("a")));
    assert!(park.iter().all(|e| e.rank() == 0));
}

#[test]
fn semi_decision_examples() {
    let park = web(FamilyKind::Park, &[1]);
    let engeler = web(FamilyKind::Engeler, &[1]);
    match semi(&park, "a", &b("Omega")) {
        MemberOutcome::Found(budget) => assert_eq!(budget.max_rank(), 0),
        other => panic!("{other:?}"),
    }
    assert!(matches!(semi(&engeler, "a", &b("Omega")), MemberOutcome::NotFoundUpTo(bud) if bud.max_rank() == 4));
    match semi(&engeler, "({a},a)", &b("I")) {
        MemberOutcome::Found(budget) => assert_eq!(budget.max_rank(), 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn decision_examples() {
    let env = Env::empty();
    let scott = web(FamilyKind::Scott, &[1]);
    let park = web(FamilyKind::Park, &[1]);
    let engeler = web(FamilyKind::Engeler, &[1]);
    assert!(!decide_member_normal(&scott, &el("a"), &b("I"), &env, 100).unwrap());
    assert!(decide_member_normal(&park, &el("a"), &b("I"), &env, 100).unwrap());
    assert!(!decide_member_normal(&engeler, &el("({a},a)"), &b("One"), &env, 100).unwrap());
    assert!(decide_member_normal(&engeler, &el("({a},a)"), &b("I"), &env, 100).unwrap());
    assert_eq!(
        decide_member_normal(&park, &el("a"), &b("Omega"), &env, 50),
        Err(InterpError::NotNormal { fuel: 50 })
    );
}

#[test]
fn witness_examples() {
    let limits = Limits::default();
    let park = web(FamilyKind::Park, &[1]);
    let budget = Budget::for_web(&park, None, 1, &limits).unwrap();
    let w = extract_witness_subpair(&park, &b("I"), &Env::empty(), &el("a"), &budget, &limits).unwrap();
    assert_eq!(w.atoms(), &BTreeSet::from([el("a")]));
    assert_eq!(w.apply(&BTreeSet::from([el("a")]), &el("a")), Some(&el("a")));
    assert_eq!(w.table_len(), 1);

    let engeler = web(FamilyKind::Engeler, &[1]);
    let budget = Budget::for_web(&engeler, None, 1, &limits).unwrap();
    let x = el("({a},a)");
    let w = extract_witness_subpair(&engeler, &b("I"), &Env::empty(), &x, &budget, &limits).unwrap();
    assert_eq!(w.atoms(), &BTreeSet::from([el("a"), x.clone()]));
    assert_eq!(w.table_len(), 1);

    let env = Env::empty().with("x", BTreeSet::from([x.clone(), el("a")]));
    let w = extract_witness_subpair(&engeler, &parse_term("x").unwrap(), &env, &x, &budget, &limits).unwrap();
    assert_eq!(w.atoms(), &BTreeSet::from([x.clone()]));
    assert_eq!(w.table_len(), 0);

    let missing = extract_witness_subpair(&engeler, &b("Omega"), &Env::empty(), &el("a"), &budget, &limits);
    assert!(matches!(missing, Err(InterpError::NotInSlice(_))));
}

#[test]
fn witness_through_applications() {
    let limits = Limits::default();
    let park = web(FamilyKind::Park, &[1]);
    let budget = Budget::for_web(&park, None, 2, &limits).unwrap();
    for t in ["Omega", "Omega3"] {
        let w = extract_witness_subpair(&park, &b(t), &Env::empty(), &el("a"), &budget, &limits).unwrap();
        assert!(interp_finite(&w, &b(t), &Env::empty()).unwrap().contains(&el("a")));
    }
    let engeler = web(FamilyKind::Engeler, &[1]);
    let budget = Budget::for_web(&engeler, None, 3, &limits).unwrap();
    let t = parse_term("(\\x.x) (\\y.y)").unwrap();
    let x = el("({a},a)");
    let w = extract_witness_subpair(&engeler, &t, &Env::empty(), &x, &budget, &limits).unwrap();
    assert!(interp_finite(&w, &t, &Env::empty()).unwrap().contains(&x));
}

#[test]
fn omega_characterization() {
    for (kind, sizes) in [
        (FamilyKind::Park, vec![1]),
        (FamilyKind::Scott, vec![1]),
        (FamilyKind::Engeler, vec![2]),
        (FamilyKind::Mixed, vec![2, 2]),
        (FamilyKind::Park, vec![3]),
    ] {
        assert!(omega_characterization_check(&family(kind, &sizes).unwrap()));
    }
}
