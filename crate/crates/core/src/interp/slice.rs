use std::collections::BTreeSet;
use std::fmt;

use super::engine::Engine;
use super::{interp_finite, Env, InterpError};
use crate::completion::{Budget, Limits, WebElement};
use crate::lambda::Term;
use crate::web::{Pair, Web};

const ENGINE_STACK: usize = 512 << 20;

/// Runs `f` on a fresh engine inside a thread with a large stack.
pub(crate) fn with_engine<'a, T: Send>(
    web: &'a Web,
    budget: &Budget,
    env: &Env<WebElement>,
    limits: &Limits,
    f: impl FnOnce(&mut Engine<'a>) -> Result<T, InterpError> + Send,
) -> Result<T, InterpError> {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(ENGINE_STACK)
            .spawn_scoped(s, || {
                let mut engine = Engine::new(web, budget, env, limits)?;
                f(&mut engine)
            })
            .expect("spawn evaluation thread")
            .join()
            .unwrap_or_else(|p| std::panic::resume_unwind(p))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// The interpretation in the finite pair itself.
    ExactForPair,
    /// A budgeted under-approximation of the interpretation in the completion.
    UnderApprox,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub web: String,
    pub term: Term,
    pub env: String,
    pub budget: Budget,
    pub elements: BTreeSet<WebElement>,
    pub exactness: Exactness,
}

impl Slice {
    pub fn header(&self) -> String {
        format!(
            "web={} term={} budget={} exact={}",
            self.web,
            self.term,
            self.budget,
            self.exactness == Exactness::ExactForPair
        )
    }
}

/// Header line, then one canonical element per line in element order.
impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header())?;
        for e in &self.elements {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `|t|` in the restricted pair of rank `b.max_rank()` over `b.atom_scope()`.
pub fn interp_slice(
    web: &Web,
    t: &Term,
    env: &Env<WebElement>,
    b: &Budget,
    limits: &Limits,
) -> Result<Slice, InterpError> {
    let elements = with_engine(web, b, env, limits, |e| e.out_term(t))?;
    Ok(Slice {
        web: web.name(),
        term: t.clone(),
        env: env.to_string(),
        budget: b.clone(),
        elements: elements.into_iter().collect(),
        exactness: Exactness::UnderApprox,
    })
}

/// `interp_finite` packaged as a slice: rank 0 over all atoms of the pair.
pub fn pair_slice(name: &str, p: &Pair, t: &Term, env: &Env<WebElement>) -> Result<Slice, InterpError> {
    if let Some(bad) = env.elements().into_iter().find(|e| e.as_atom().is_none()) {
        return Err(InterpError::ForeignElement(bad.to_string()));
    }
    let atom_env = env.map_values(|e| e.as_atom().expect("atom").clone());
    let elements = interp_finite(p, t, &atom_env)?.into_iter().map(WebElement::Atom).collect();
    let web = Web::finite(name, p.clone());
    let budget = Budget::for_web(&web, None, 0, &Limits { max_scope: usize::MAX, ..Limits::default() })?;
    Ok(Slice { web: name.to_string(), term: t.clone(), env: env.to_string(), budget, elements, exactness: Exactness::ExactForPair })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberOutcome {
    Found(Budget),
    NotFoundUpTo(Budget),
}

impl MemberOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, MemberOutcome::Found(_))
    }
}

/// Ranks 0 through `max_rank` over `scope` atoms (all atoms of a finite web).
pub fn default_schedule(
    web: &Web,
    scope: Option<usize>,
    max_rank: usize,
    limits: &Limits,
) -> Result<Vec<Budget>, InterpError> {
    let base = Budget::for_web(web, scope, max_rank, limits)?;
    Ok((0..=max_rank).map(|r| base.with_rank(r)).collect())
}

/// The first budget of `schedule` whose slice contains `x`.
pub fn member_semi(
    web: &Web,
    x: &WebElement,
    t: &Term,
    env: &Env<WebElement>,
    schedule: &[Budget],
    limits: &Limits,
) -> Result<MemberOutcome, InterpError> {
    let last = schedule.last().ok_or(InterpError::EmptySchedule)?;
    for b in schedule {
        if !b.admits(x) {
            continue;
        }
        if with_engine(web, b, env, limits, |e| e.mem_term(x, t))? {
            return Ok(MemberOutcome::Found(b.clone()));
        }
    }
    Ok(MemberOutcome::NotFoundUpTo(last.clone()))
}

/// Membership of each of `xs` in the slice of `t` at budget `b`.
pub fn members_at(
    web: &Web,
    xs: &[WebElement],
    t: &Term,
    env: &Env<WebElement>,
    b: &Budget,
    limits: &Limits,
) -> Result<Vec<bool>, InterpError> {
    with_engine(web, b, env, limits, |e| xs.iter().map(|x| e.mem_term(x, t)).collect())
}
