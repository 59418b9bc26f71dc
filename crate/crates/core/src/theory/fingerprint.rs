use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{check_inequation, CheckConfig, TheoryError, Verdict};
use crate::lambda::{builtin, Term};
use crate::web::Web;

/// Verdicts of one web on a list of named inequations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryFingerprint {
    pub web: String,
    pub cells: BTreeMap<String, Verdict>,
}

/// `I, 1, T, F, S, Ω, Ω₃, 1Ω₃, λx.Ω, λxy.Ω` with their display names.
pub fn default_corpus() -> Vec<(String, Term)> {
    let b = |n: &str| builtin(n).expect("builtin");
    vec![
        ("I".into(), b("I")),
        ("One".into(), b("One")),
        ("T".into(), b("T")),
        ("F".into(), b("F")),
        ("S".into(), b("S")),
        ("Omega".into(), b("Omega")),
        ("Omega3".into(), b("Omega3")),
        ("One Omega3".into(), Term::app(b("One"), b("Omega3"))),
        ("\\x.Omega".into(), Term::lam(b("Omega"))),
        ("\\x y.Omega".into(), Term::lams(2, b("Omega"))),
    ]
}

/// Every ordered pair of distinct corpus terms, named `M <= N`.
pub fn corpus_inequations(corpus: &[(String, Term)]) -> Vec<(String, Term, Term)> {
    let mut out = Vec::new();
    for (i, (mn, m)) in corpus.iter().enumerate() {
        for (j, (nn, n)) in corpus.iter().enumerate() {
            if i != j {
                out.push((format!("{mn} <= {nn}"), m.clone(), n.clone()));
            }
        }
    }
    out
}

pub fn fingerprint(
    web: &Web,
    inequations: &[(String, Term, Term)],
    cfg: &CheckConfig,
) -> Result<TheoryFingerprint, TheoryError> {
    Ok(fingerprints(&[(web.clone(), cfg.clone())], inequations)?.remove(0))
}

/// Fingerprints of several webs, each cell computed independently in
/// parallel and collected in input order.
pub fn fingerprints(
    webs: &[(Web, CheckConfig)],
    inequations: &[(String, Term, Term)],
) -> Result<Vec<TheoryFingerprint>, TheoryError> {
    let cells: Vec<(usize, usize)> =
        (0..webs.len()).flat_map(|w| (0..inequations.len()).map(move |i| (w, i))).collect();
    let verdicts: Vec<Verdict> = cells
        .par_iter()
        .map(|&(w, i)| {
            let (web, cfg) = &webs[w];
            let (_, m, n) = &inequations[i];
            check_inequation(web, m, n, cfg)
        })
        .collect::<Result<_, _>>()?;
    let mut out: Vec<TheoryFingerprint> =
        webs.iter().map(|(w, _)| TheoryFingerprint { web: w.name(), cells: BTreeMap::new() }).collect();
    for ((w, i), v) in cells.into_iter().zip(verdicts) {
        out[w].cells.insert(inequations[i].0.clone(), v);
    }
    Ok(out)
}
