mod common;

use common::family_web;
use lamweb::completion::Limits;
use lamweb::interp::{decide_member_normal, interp_finite, Env};
use lamweb::lambda::builtin;
use lamweb::theory::{
    check_inequation, corpus_inequations, default_corpus, fingerprints, min_model_prefix, CheckConfig, Verdict,
};
use lamweb::web::{component, FamilyKind, Web};

fn cfg(w: &Web, left_rank: usize) -> CheckConfig {
    CheckConfig::ranks(w, None, left_rank, &Limits::default(), 500).unwrap()
}

fn replay(m: &lamweb::lambda::Term, n: &lamweb::lambda::Term, w: &Web, v: &Verdict) {
    if let Verdict::CertifiedRefuted { witness, subpair, .. } = v {
        assert!(interp_finite(subpair, m, &Env::empty()).unwrap().contains(witness));
        assert!(!decide_member_normal(w, witness, n, &Env::empty(), 500).unwrap());
    }
}

#[test]
fn fingerprints_separate_engeler_from_scott() {
    let engeler = family_web(FamilyKind::Engeler, &[1]);
    let scott = family_web(FamilyKind::Scott, &[1]);
    let corpus = default_corpus();
    let ineqs = corpus_inequations(&corpus);
    let fps = fingerprints(&[(engeler.clone(), cfg(&engeler, 2)), (scott.clone(), cfg(&scott, 2))], &ineqs).unwrap();
    assert_eq!(fps[0].cells["I <= One"].kind(), "CertifiedRefuted");
    assert_eq!(fps[1].cells["I <= One"].kind(), "SupportedUpTo");
    for (fp, w) in fps.iter().zip([&engeler, &scott]) {
        assert_eq!(fp.cells.len(), ineqs.len());
        for (name, m, n) in &ineqs {
            replay(m, n, w, &fp.cells[name]);
        }
    }
    let again = fingerprints(&[(engeler.clone(), cfg(&engeler, 2)), (scott.clone(), cfg(&scott, 2))], &ineqs).unwrap();
    assert_eq!(fps, again);
}

#[test]
fn component_refutations_survive_in_the_prefix() {
    let m = 4;
    let prefix = min_model_prefix(m).unwrap();
    let names = ["I", "One", "T", "F", "Delta"];
    let terms: Vec<_> = names.iter().map(|n| builtin(n).unwrap()).collect();
    let mut refuted = 0;
    for k in 1..=m as u32 {
        let comp = Web::finite(format!("c{k}"), component(prefix.as_pair().unwrap(), k).unwrap());
        for a in &terms {
            for b in &terms {
                if a == b {
                    continue;
                }
                let local = check_inequation(&comp, a, b, &cfg(&comp, 1)).unwrap();
                if let Verdict::CertifiedRefuted { .. } = local {
                    refuted += 1;
                    let global = check_inequation(&prefix, a, b, &cfg(&prefix, 1)).unwrap();
                    assert!(!matches!(global, Verdict::SupportedUpTo(_)), "component {k}: {a} <= {b}");
                    replay(a, b, &prefix, &global);
                }
            }
        }
    }
    assert!(refuted > 0);
}
