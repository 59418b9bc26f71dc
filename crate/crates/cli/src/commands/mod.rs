mod encode;
mod models;
mod terms;

use anyhow::{anyhow, Result};
use lamweb::completion::{CompletionError, Limits};
use lamweb::interp::InterpError;
use lamweb::lambda::{parse_term, Term};
use lamweb::theory::TheoryError;
use lamweb::web::WebError;

use crate::{exit, Cli, Command, Global};

pub(crate) fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let g = &cli.global;
    match &cli.command {
        Command::Parse { term } => terms::parse(term),
        Command::Normalize { term } => terms::normalize_term(g, term),
        Command::Bt { term, depth } => terms::bt(g, term, *depth),
        Command::Interp { web, term, rank, atoms, env, exact } => {
            terms::interp(g, web, term, *rank, *atoms, env, *exact)
        }
        Command::Member { web, term, element, atoms, env, decide } => {
            terms::member(g, web, term, element, *atoms, env, *decide)
        }
        Command::Check { web, le, eq, rank, atoms } => models::check(g, web, le.as_deref(), eq.as_deref(), *rank, *atoms),
        Command::Orbits { web } => models::orbits(web),
        Command::Glue { webs } => models::glue_webs(webs),
        Command::Minmodel { prefix, check, term, rank } => {
            models::minmodel(g, *prefix, check.as_deref(), term.as_deref(), *rank)
        }
        Command::Fingerprint { webs, corpus, rank } => models::fingerprint(g, webs, corpus, *rank),
        Command::Encode { what } => encode::encode(what),
    }
}

pub(crate) fn limits(g: &Global) -> Limits {
    Limits { max_rank: g.max_rank, max_elements: g.max_elements, ..Limits::default() }
}

pub(crate) fn term(text: &str) -> Result<Term> {
    parse_term(text).map_err(|e| anyhow!("term `{text}`: {e}"))
}

fn completion_budget(e: &CompletionError) -> bool {
    matches!(e, CompletionError::RankLimit { .. } | CompletionError::ElementLimit { .. } | CompletionError::ScopeLimit { .. })
}

fn interp_budget(e: &InterpError) -> bool {
    match e {
        InterpError::SubsetLimit { .. } | InterpError::StepLimit(_) | InterpError::NotNormal { .. } => true,
        InterpError::Completion(c) => completion_budget(c),
        _ => false,
    }
}

/// Exit code 3 for exhausted budgets and limits, 2 for everything else.
pub(crate) fn error_code(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        let budget = if let Some(i) = cause.downcast_ref::<InterpError>() {
            interp_budget(i)
        } else if let Some(c) = cause.downcast_ref::<CompletionError>() {
            completion_budget(c)
        } else if let Some(t) = cause.downcast_ref::<TheoryError>() {
            match t {
                TheoryError::Interp(i) => interp_budget(i),
                TheoryError::Completion(c) => completion_budget(c),
                TheoryError::EnumerationLimit { .. } => true,
                _ => false,
            }
        } else if let Some(w) = cause.downcast_ref::<WebError>() {
            matches!(w, WebError::SizeLimit { .. })
        } else {
            false
        };
        if budget {
            return exit::BUDGET;
        }
    }
    exit::INPUT
}
