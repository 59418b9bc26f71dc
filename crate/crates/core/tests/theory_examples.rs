mod common;

use common::family_web;
use lamweb::completion::{parse_element, Limits};
use lamweb::interp::{decide_member_normal, interp_finite, Env};
use lamweb::lambda::{builtin, parse_term, Term};
use lamweb::theory::{
    check_equation, check_inequation, component_restriction_check, observation_set, retract_transport_check,
    CheckConfig, TheoryError, Verdict, min_model_prefix,
};
use lamweb::web::{family, glue, FamilyKind, Web};

fn b(n: &str) -> Term {
    builtin(n).unwrap()
}

fn cfg(w: &Web, left_rank: usize) -> CheckConfig {
    CheckConfig::ranks(w, None, left_rank, &Limits::default(), 500).unwrap()
}

#[test]
fn identity_below_one() {
    let engeler = family_web(FamilyKind::Engeler, &[1]);
    let v = check_inequation(&engeler, &b("I"), &b("One"), &cfg(&engeler, 3)).unwrap();
    let Verdict::CertifiedRefuted { witness, subpair, .. } = &v else { panic!("{v}") };
    assert_eq!(witness, &parse_element("({a},a)").unwrap());
    assert!(interp_finite(subpair, &b("I"), &Env::empty()).unwrap().contains(witness));
    assert!(!decide_member_normal(&engeler, witness, &b("One"), &Env::empty(), 500).unwrap());

    let scott = family_web(FamilyKind::Scott, &[1]);
    let v = check_inequation(&scott, &b("I"), &b("One"), &cfg(&scott, 3)).unwrap();
    assert!(matches!(&v, Verdict::SupportedUpTo(bud) if bud.max_rank() == 3), "{v}");
}

#[test]
fn omega3_below_one_omega3() {
    let m = b("Omega3");
    let n = Term::app(b("One"), b("Omega3"));
    for w in [
        family_web(FamilyKind::Engeler, &[1]),
        family_web(FamilyKind::Scott, &[1]),
        family_web(FamilyKind::Park, &[1]),
    ] {
        let v = check_inequation(&w, &m, &n, &cfg(&w, 3)).unwrap();
        assert!(matches!(v, Verdict::SupportedUpTo(_)), "{} {v}", w.name());
    }
}

#[test]
fn equations() {
    let park = family_web(FamilyKind::Park, &[1]);
    let (l, r) = check_equation(&park, &b("T"), &b("F"), &cfg(&park, 2)).unwrap();
    assert_eq!((l.kind(), r.kind()), ("CertifiedRefuted", "CertifiedRefuted"));
    let (l, r) = check_equation(&park, &b("S"), &b("S"), &cfg(&park, 2)).unwrap();
    assert_eq!((l.kind(), r.kind()), ("SupportedUpTo", "SupportedUpTo"));
    let open = parse_term("x").unwrap();
    assert!(matches!(check_inequation(&park, &open, &b("I"), &cfg(&park, 1)), Err(TheoryError::NotClosed(_))));
}

#[test]
fn observation_sets() {
    let engeler = family_web(FamilyKind::Engeler, &[1]);
    let corpus = vec![b("I"), b("Omega"), b("T")];
    let obs = observation_set(&corpus, &engeler, &b("I"), &cfg(&engeler, 2)).unwrap();
    assert!(obs.contains(&b("I")) && obs.contains(&b("Omega")));
    let park = family_web(FamilyKind::Park, &[1]);
    assert!(observation_set(&[b("T")], &park, &b("F"), &cfg(&park, 2)).unwrap().is_empty());
}

#[test]
fn refutations_are_stable_under_larger_schedules() {
    let engeler = family_web(FamilyKind::Engeler, &[1]);
    let small = check_inequation(&engeler, &b("I"), &b("One"), &cfg(&engeler, 1)).unwrap();
    let large = check_inequation(&engeler, &b("I"), &b("One"), &cfg(&engeler, 3)).unwrap();
    assert_eq!(small.witness(), large.witness());
    assert_eq!(small.kind(), "CertifiedRefuted");
}

#[test]
fn component_restriction() {
    let limits = Limits::default();
    let prefix = min_model_prefix(2).unwrap();
    assert!(component_restriction_check(&prefix, 1, &b("I"), 1, &limits).unwrap());
    let glued = Web::finite("sp", glue(&[family(FamilyKind::Scott, &[1]).unwrap(), family(FamilyKind::Park, &[1]).unwrap()]));
    assert!(component_restriction_check(&glued, 2, &b("Omega"), 2, &limits).unwrap());
    let open = parse_term("x").unwrap();
    assert!(component_restriction_check(&prefix, 1, &open, 1, &limits).is_err());
}

#[test]
fn retract_transport() {
    let park = family(FamilyKind::Park, &[1]).unwrap();
    let glued = Web::finite("pp", glue(&[park.clone(), park.clone()]));
    let comp = Web::finite("p1", lamweb::web::component(glued.as_pair().unwrap(), 1).unwrap());
    let c = cfg(&comp, 2);
    let v = check_inequation(&comp, &b("T"), &b("F"), &c).unwrap();
    assert_eq!(v.kind(), "CertifiedRefuted");
    assert!(retract_transport_check(&glued, 1, &b("T"), &b("F"), &v, &c).unwrap());

    let single = Web::finite("p", glue(&[park]));
    let comp = Web::finite("p1", lamweb::web::component(single.as_pair().unwrap(), 1).unwrap());
    let v = check_inequation(&comp, &b("T"), &b("F"), &c).unwrap();
    assert!(retract_transport_check(&single, 1, &b("T"), &b("F"), &v, &c).unwrap());

    let bad = Web::finite("sp", glue(&[family(FamilyKind::Scott, &[1]).unwrap(), family(FamilyKind::Park, &[1]).unwrap()]));
    assert!(matches!(retract_transport_check(&bad, 2, &b("T"), &b("F"), &v, &c), Err(TheoryError::Web(_))));
}
