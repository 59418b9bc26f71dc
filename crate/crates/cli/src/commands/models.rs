use std::fmt::Write;

use anyhow::{anyhow, bail, Context, Result};
use lamweb::lambda::Term;
use lamweb::theory::{
    check_inequation, corpus_inequations, default_corpus, fingerprints, min_model_prefix, CheckConfig, Verdict,
};
use lamweb::web::{automorphisms, glue, is_good, orbits as web_orbits, Pair, Web, SEARCH_LIMIT};

use super::{limits, term};
use crate::websrc::{parse_web_spec, WebSpec};
use crate::{exit, Global, Output};

/// `M <= N` or `M = N`, the flag telling which.
fn split_relation(text: &str) -> Result<(Term, Term, bool)> {
    if let Some((m, n)) = text.split_once("<=") {
        return Ok((term(m.trim())?, term(n.trim())?, false));
    }
    if let Some((m, n)) = text.split_once('=') {
        return Ok((term(m.trim())?, term(n.trim())?, true));
    }
    bail!("expected `M <= N` or `M = N`, got `{text}`")
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::SupportedUpTo(_) => exit::OK,
        Verdict::CertifiedRefuted { .. } => exit::REFUTED,
        Verdict::CandidateRefuted { .. } | Verdict::Inconclusive { .. } => exit::INCONCLUSIVE,
    }
}

/// Refuted beats inconclusive beats supported.
fn combined_code(vs: &[&Verdict]) -> i32 {
    let codes: Vec<i32> = vs.iter().map(|v| verdict_code(v)).collect();
    if codes.contains(&exit::REFUTED) {
        exit::REFUTED
    } else {
        codes.into_iter().max().unwrap_or(exit::OK)
    }
}

fn tsv_line(web: &str, ineq: &str, v: &Verdict) -> String {
    let witness = v.witness().map(|w| w.to_string()).unwrap_or_default();
    let budget = v.budget().map(|b| b.to_string()).unwrap_or_default();
    format!("{web}\t{ineq}\t{}\t{witness}\t{budget}\n", v.kind())
}

fn render_verdict(g: &Global, web: &str, ineq: &str, v: &Verdict) -> String {
    match g.output {
        Output::Tsv => tsv_line(web, ineq, v),
        Output::Pretty => {
            let mut out = format!("{web}: {ineq}: {v}\n");
            if let Verdict::CertifiedRefuted { subpair, .. } = v {
                for line in subpair.to_string().lines() {
                    writeln!(out, "  {line}").expect("string write");
                }
            }
            out
        }
    }
}

fn run_check(g: &Global, spec: &WebSpec, relation: &str, rank: usize) -> Result<(i32, String)> {
    let (m, n, both) = split_relation(relation)?;
    let cfg = CheckConfig::ranks(&spec.web, spec.scope, rank, &limits(g), g.fuel)?;
    let name = spec.web.name();
    let forward = check_inequation(&spec.web, &m, &n, &cfg)?;
    let mut out = render_verdict(g, &name, &format!("{m} <= {n}"), &forward);
    if !both {
        return Ok((verdict_code(&forward), out));
    }
    let backward = check_inequation(&spec.web, &n, &m, &cfg)?;
    out += &render_verdict(g, &name, &format!("{n} <= {m}"), &backward);
    Ok((combined_code(&[&forward, &backward]), out))
}

pub(crate) fn check(
    g: &Global,
    web: &str,
    le: Option<&str>,
    eq: Option<&str>,
    rank: usize,
    atoms: Option<usize>,
) -> Result<(i32, String)> {
    let mut spec = parse_web_spec(web)?;
    spec.scope = atoms.or(spec.scope);
    match (le, eq) {
        (Some(r), None) => {
            if !r.contains("<=") {
                bail!("--le expects `M <= N`");
            }
            run_check(g, &spec, r, rank)
        }
        (None, Some(r)) => {
            if r.contains("<=") || !r.contains('=') {
                bail!("--eq expects `M = N`");
            }
            run_check(g, &spec, r, rank)
        }
        _ => bail!("give exactly one of --le and --eq"),
    }
}

fn finite(spec: &WebSpec) -> Result<&Pair> {
    spec.web.as_pair().ok_or_else(|| anyhow!("web {} is not finite", spec.web.name()))
}

pub(crate) fn orbits(web: &str) -> Result<(i32, String)> {
    let spec = parse_web_spec(web)?;
    let p = finite(&spec)?;
    let auts = automorphisms(p, SEARCH_LIMIT)?;
    let orbits = web_orbits(p, SEARCH_LIMIT)?;
    let plural = |n: usize, word: &str| if n == 1 { format!("{n} {word}") } else { format!("{n} {word}s") };
    let mut out = format!("{}; {}\n", plural(orbits.len(), "orbit"), plural(auts.len(), "automorphism"));
    for o in orbits {
        let names: Vec<String> = o.iter().map(|a| a.to_string()).collect();
        writeln!(out, "{{{}}}", names.join(" ")).expect("string write");
    }
    Ok((exit::OK, out))
}

fn web_list(webs: &str) -> Result<Vec<WebSpec>> {
    webs.split(',').map(|w| parse_web_spec(w.trim())).collect()
}

pub(crate) fn glue_webs(webs: &str) -> Result<(i32, String)> {
    let specs = web_list(webs)?;
    let pairs = specs.iter().map(|s| finite(s).cloned()).collect::<Result<Vec<_>>>()?;
    let glued = glue(&pairs);
    let good: Vec<String> = pairs.iter().map(|p| is_good(p).to_string()).collect();
    Ok((exit::OK, format!("{glued}\ngood: {}\n", good.join(" "))))
}

pub(crate) fn minmodel(
    g: &Global,
    prefix: usize,
    check: Option<&str>,
    text: Option<&str>,
    rank: usize,
) -> Result<(i32, String)> {
    let web = min_model_prefix(prefix)?;
    let spec = WebSpec { web, scope: None };
    if let Some(relation) = check {
        return run_check(g, &spec, relation, rank);
    }
    if let Some(t) = text {
        let env = String::new();
        return super::terms::interp(g, &format!("minmodel:{prefix}"), t, rank, None, &env, false);
    }
    Ok((exit::OK, format!("{}\n", finite(&spec)?)))
}

fn load_corpus(corpus: &str) -> Result<Vec<(String, Term)>> {
    if corpus == "default" {
        return Ok(default_corpus());
    }
    let text = std::fs::read_to_string(corpus).with_context(|| format!("cannot read corpus `{corpus}`"))?;
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (name, src) = match line.split_once('=') {
            Some((n, s)) => (n.trim().to_string(), s.trim()),
            None => (line.to_string(), line),
        };
        out.push((name, term(src)?));
    }
    Ok(out)
}

pub(crate) fn fingerprint(g: &Global, webs: &str, corpus: &str, rank: usize) -> Result<(i32, String)> {
    let specs = web_list(webs)?;
    let corpus = load_corpus(corpus)?;
    let ineqs = corpus_inequations(&corpus);
    let configs = specs
        .iter()
        .map(|s| Ok((s.web.clone(), CheckConfig::ranks(&s.web, s.scope, rank, &limits(g), g.fuel)?)))
        .collect::<Result<Vec<(Web, CheckConfig)>>>()?;
    let fps = fingerprints(&configs, &ineqs)?;
    let inconclusive = fps.iter().flat_map(|f| f.cells.values()).any(|v| matches!(v, Verdict::Inconclusive { .. }));
    let code = if inconclusive { exit::INCONCLUSIVE } else { exit::OK };
    let mut out = String::new();
    match g.output {
        Output::Tsv => {
            for fp in &fps {
                for (name, _, _) in &ineqs {
                    out += &tsv_line(&fp.web, name, &fp.cells[name]);
                }
            }
        }
        Output::Pretty => {
            let first = ineqs.iter().map(|(n, _, _)| n.len()).max().unwrap_or(0).max("inequation".len());
            let widths: Vec<usize> = fps.iter().map(|f| f.web.len().max("CertifiedRefuted".len())).collect();
            write!(out, "{:first$}", "inequation").expect("string write");
            for (fp, w) in fps.iter().zip(&widths) {
                write!(out, "  {:w$}", fp.web).expect("string write");
            }
            out = out.trim_end().to_string();
            out.push('\n');
            for (name, _, _) in &ineqs {
                write!(out, "{name:first$}").expect("string write");
                for (fp, w) in fps.iter().zip(&widths) {
                    write!(out, "  {:w$}", fp.cells[name].kind()).expect("string write");
                }
                out = out.trim_end().to_string();
                out.push('\n');
            }
        }
    }
    Ok((code, out))
}
