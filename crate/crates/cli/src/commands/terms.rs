use std::fmt::Write;

use anyhow::{anyhow, Result};
use lamweb::codec::encode_term;
use lamweb::completion::{parse_element, Budget, WebElement};
use lamweb::interp::{
    decide_member_normal, default_schedule, interp_slice, member_semi, pair_slice, Exactness, MemberOutcome, Slice,
};
use lamweb::lambda::{bohm_approximant, normalize, Normalized};

use super::{limits, term};
use crate::cache::SliceCache;
use crate::websrc::{parse_env, parse_web_spec};
use crate::{exit, Global, Output};

pub(crate) fn parse(text: &str) -> Result<(i32, String)> {
    Ok((exit::OK, format!("{}\n", term(text)?)))
}

pub(crate) fn normalize_term(g: &Global, text: &str) -> Result<(i32, String)> {
    match normalize(&term(text)?, g.fuel) {
        Normalized::Normal(t) => Ok((exit::OK, format!("{t}\n"))),
        Normalized::OutOfFuel(t) => Ok((exit::BUDGET, format!("no normal form within {} steps; reached {t}\n", g.fuel))),
    }
}


pub(crate) fn bt(g: &Global, text: &str, depth: usize) -> Result<(i32, String)> {
    Ok((exit::OK, format!("{}\n", bohm_approximant(&term(text)?, depth, g.fuel))))
}

fn render_slice(g: &Global, slice: &Slice) -> String {
    match g.output {
        Output::Pretty => slice.to_string(),
        Output::Tsv => {
            let mut out = format!("# {}\n", slice.header());
            for e in &slice.elements {
                writeln!(out, "{e}\t{}", e.rank()).expect("string write");
            }
            out
        }
    }
}

/// The slice at `budget`, read from and written to the cache when enabled.
fn cached_slice(
    g: &Global,
    web: &lamweb::web::Web,
    t: &lamweb::lambda::Term,
    env: &lamweb::interp::Env<WebElement>,
    budget: &Budget,
) -> Result<Slice> {
    let cache = match (&g.cache_dir, g.no_cache) {
        (Some(dir), false) => Some(SliceCache::new(dir)),
        _ => None,
    };
    let shell = Slice {
        web: web.name(),
        term: t.clone(),
        env: env.to_string(),
        budget: budget.clone(),
        elements: Default::default(),
        exactness: Exactness::UnderApprox,
    };
    let header = shell.header();
    let key = SliceCache::key(&[&web.canonical(), &encode_term(t).to_string(), &env.to_string(), &budget.to_string()]);
    if let Some(elements) = cache.as_ref().and_then(|c| c.load(&key, &header)) {
        return Ok(Slice { elements, ..shell });
    }
    let slice = interp_slice(web, t, env, budget, &limits(g))?;
    if let Some(c) = &cache {
        c.store(&key, &slice.to_string())?;
    }
    Ok(slice)
}

pub(crate) fn interp(
    g: &Global,
    web: &str,
    text: &str,
    rank: usize,
    atoms: Option<usize>,
    env: &str,
    exact: bool,
) -> Result<(i32, String)> {
    let spec = parse_web_spec(web)?;
    let t = term(text)?;
    let env = parse_env(env)?;
    let slice = if exact {
        let pair = spec.web.as_pair().ok_or_else(|| anyhow!("--exact needs a finite web"))?;
        pair_slice(&spec.web.name(), pair, &t, &env)?
    } else {
        let budget = Budget::for_web(&spec.web, atoms.or(spec.scope), rank, &limits(g))?;
        cached_slice(g, &spec.web, &t, &env, &budget)?
    };
    Ok((exit::OK, render_slice(g, &slice)))
}

pub(crate) fn member(
    g: &Global,
    web: &str,
    text: &str,
    element: &str,
    atoms: Option<usize>,
    env: &str,
    decide: bool,
) -> Result<(i32, String)> {
    let spec = parse_web_spec(web)?;
    let t = term(text)?;
    let env = parse_env(env)?;
    let x = parse_element(element)?;
    if decide {
        let member = decide_member_normal(&spec.web, &x, &t, &env, g.fuel)?;
        return Ok((exit::OK, format!("{member}\n")));
    }
    let schedule = default_schedule(&spec.web, atoms.or(spec.scope), g.max_rank, &limits(g))?;
    let line = match member_semi(&spec.web, &x, &t, &env, &schedule, &limits(g))? {
        MemberOutcome::Found(b) => format!("Found({b})\n"),
        MemberOutcome::NotFoundUpTo(b) => format!("NotFoundUpTo({b})\n"),
    };
    Ok((exit::OK, line))
}
