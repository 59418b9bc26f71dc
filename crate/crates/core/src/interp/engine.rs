//! Goal-directed evaluation of interpretations in the restricted pair `G_K`
//! (all completion elements of rank ≤ K over the atom scope).
//!
//! A goal describes the spine `h S₁ … Sₙ`: the head term `h` in an
//! environment, applied to argument sets. Membership of `α` holds when there
//! is a chain `e₀ ∈ |h|`, `eᵢ₋₁ = i(aᵢ, eᵢ)` with `aᵢ ⊆ Sᵢ` and `eₙ = α`.
//! `caps[i]` bounds the rank of `eᵢ`. Argument sets and variable values stay
//! symbolic (`|t|_env ∩ E_r`) until a concrete element has to be tested, so
//! strata are only enumerated for λ-abstractions whose whole denotation is
//! requested.
//!
//! For a head `λx.N` applied to `S₁` with `caps[0] = c ≥ 1`, every chain
//! element lies in `E_{c-1}` and the body is monotone in `x`, so binding
//! `x := S₁ ∩ E_{c-1}` once is exact. With `c = 0` only the generator's own
//! rows qualify.
//!
//! Recursive goals are tabled: a goal met again on the current path answers
//! with its provisional value (false, or the set found so far), set goals are
//! iterated to a fixpoint, and answers that relied on an ancestor's
//! provisional value are not memoized.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use super::{Env, InterpError};
use crate::completion::{strata, Budget, Limits, WebElement};
use crate::lambda::Term;
use crate::web::Web;

type ElId = u32;
type SetId = u32;
type EnvId = u32;
type TermId = u32;

/// Largest stratum whose subsets are enumerated for a λ-abstraction.
pub const SUBSET_LIMIT_BITS: usize = 16;
pub const STEP_LIMIT: u64 = 20_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
enum TNode {
    Var(usize),
    Free(String),
    App(TermId, TermId),
    Lam(TermId),
    Bot,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum LazySet {
    /// sorted by id
    Explicit(Rc<[ElId]>),
    Interp { term: TermId, env: EnvId, cap: u8 },
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Goal {
    term: TermId,
    env: EnvId,
    args: Rc<[SetId]>,
    caps: Rc<[u8]>,
    exact: Option<ElId>,
}

type Preimage = (Rc<[ElId]>, ElId);

pub(crate) struct Engine<'w> {
    web: &'w Web,
    budget: Budget,
    limits: Limits,
    k: u8,
    steps: u64,
    els: Vec<WebElement>,
    ranks: Vec<u8>,
    el_ids: HashMap<WebElement, ElId>,
    unap: HashMap<ElId, Option<Preimage>>,
    base_fwd: HashMap<(Rc<[ElId]>, ElId), ElId>,
    base_rows: Vec<(Rc<[ElId]>, ElId, ElId)>,
    terms: Vec<TNode>,
    term_ids: HashMap<TNode, TermId>,
    sets: Vec<LazySet>,
    set_ids: HashMap<LazySet, SetId>,
    envs: Vec<Rc<[SetId]>>,
    env_ids: HashMap<Rc<[SetId]>, EnvId>,
    free: HashMap<String, SetId>,
    empty_set: SetId,
    root_env: EnvId,
    strata: Option<Vec<Vec<ElId>>>,
    mem_memo: HashMap<(Goal, ElId), bool>,
    out_memo: HashMap<Goal, Rc<[ElId]>>,
    active_mem: HashMap<(Goal, ElId), usize>,
    active_out: HashMap<Goal, (usize, Rc<[ElId]>, bool)>,
    depth: usize,
    low: usize,
}

impl<'w> Engine<'w> {
    pub(crate) fn new(web: &'w Web, budget: &Budget, env: &Env<WebElement>, limits: &Limits) -> Result<Self, InterpError> {
        if budget.max_rank() > limits.max_rank {
            return Err(crate::completion::CompletionError::RankLimit { rank: budget.max_rank(), limit: limits.max_rank }.into());
        }
        let mut e = Engine {
            web,
            budget: budget.clone(),
            limits: *limits,
            k: budget.max_rank() as u8,
            steps: 0,
            els: Vec::new(),
            ranks: Vec::new(),
            el_ids: HashMap::new(),
            unap: HashMap::new(),
            base_fwd: HashMap::new(),
            base_rows: Vec::new(),
            terms: Vec::new(),
            term_ids: HashMap::new(),
            sets: Vec::new(),
            set_ids: HashMap::new(),
            envs: Vec::new(),
            env_ids: HashMap::new(),
            free: HashMap::new(),
            empty_set: 0,
            root_env: 0,
            strata: None,
            mem_memo: HashMap::new(),
            out_memo: HashMap::new(),
            active_mem: HashMap::new(),
            active_out: HashMap::new(),
            depth: 0,
            low: usize::MAX,
        };
        e.empty_set = e.explicit(Vec::new());
        e.root_env = e.intern_env(Rc::from(Vec::new()));
        for ((arg, x), v) in web.rows_over(budget.atom_scope()) {
            let mut b: Vec<ElId> = arg.into_iter().map(|a| e.intern_el(WebElement::Atom(a))).collect();
            b.sort_unstable();
            let b: Rc<[ElId]> = b.into();
            let x = e.intern_el(WebElement::Atom(x));
            let v = e.intern_el(WebElement::Atom(v));
            e.base_fwd.insert((b.clone(), x), v);
            e.unap.insert(v, Some((b.clone(), x)));
            e.base_rows.push((b, x, v));
        }
        for (name, values) in env.iter() {
            let mut ids = Vec::new();
            for x in values {
                if !budget.admits(x) {
                    return Err(InterpError::ForeignElement(x.to_string()));
                }
                ids.push(e.intern_el(x.clone()));
            }
            let s = e.explicit(ids);
            e.free.insert(name.clone(), s);
        }
        Ok(e)
    }

    pub(crate) fn budget(&self) -> &Budget {
        &self.budget
    }

    // ---- interning -------------------------------------------------------

    fn intern_el(&mut self, e: WebElement) -> ElId {
        if let Some(&id) = self.el_ids.get(&e) {
            return id;
        }
        let id = self.els.len() as ElId;
        self.ranks.push(e.rank() as u8);
        self.els.push(e.clone());
        self.el_ids.insert(e, id);
        id
    }

    fn rank(&self, e: ElId) -> u8 {
        self.ranks[e as usize]
    }

    fn intern_term(&mut self, t: &Term) -> TermId {
        let node = match t {
            Term::Var(i) => TNode::Var(*i),
            Term::Free(n) => TNode::Free(n.clone()),
            Term::Bottom => TNode::Bot,
            Term::App(p, q) => {
                let p = self.intern_term(p);
                let q = self.intern_term(q);
                TNode::App(p, q)
            }
            Term::Lam(b) => TNode::Lam(self.intern_term(b)),
        };
        if let Some(&id) = self.term_ids.get(&node) {
            return id;
        }
        let id = self.terms.len() as TermId;
        self.terms.push(node.clone());
        self.term_ids.insert(node, id);
        id
    }

    fn intern_set(&mut self, s: LazySet) -> SetId {
        if let Some(&id) = self.set_ids.get(&s) {
            return id;
        }
        let id = self.sets.len() as SetId;
        self.sets.push(s.clone());
        self.set_ids.insert(s, id);
        id
    }

    fn explicit(&mut self, mut ids: Vec<ElId>) -> SetId {
        ids.sort_unstable();
        ids.dedup();
        self.intern_set(LazySet::Explicit(ids.into()))
    }

    fn intern_env(&mut self, stack: Rc<[SetId]>) -> EnvId {
        if let Some(&id) = self.env_ids.get(&stack) {
            return id;
        }
        let id = self.envs.len() as EnvId;
        self.envs.push(stack.clone());
        self.env_ids.insert(stack, id);
        id
    }

    fn push_env(&mut self, env: EnvId, s: SetId) -> EnvId {
        let mut v = self.envs[env as usize].to_vec();
        v.push(s);
        self.intern_env(v.into())
    }

    fn lookup(&self, env: EnvId, i: usize) -> Result<SetId, InterpError> {
        let stack = &self.envs[env as usize];
        stack.len().checked_sub(i + 1).map(|p| stack[p]).ok_or(InterpError::DanglingIndex(i))
    }

    /// `s ∩ E_r`
    fn restrict(&mut self, s: SetId, r: u8) -> SetId {
        match self.sets[s as usize].clone() {
            LazySet::Explicit(xs) => {
                if xs.iter().all(|&x| self.rank(x) <= r) {
                    s
                } else {
                    let kept = xs.iter().copied().filter(|&x| self.rank(x) <= r).collect();
                    self.explicit(kept)
                }
            }
            LazySet::Interp { term, env, cap } if cap > r => self.intern_set(LazySet::Interp { term, env, cap: r }),
            LazySet::Interp { .. } => s,
        }
    }

    /// `|t|_env ∩ E_cap`, resolving variables directly.
    fn interp_set(&mut self, term: TermId, env: EnvId, cap: u8) -> Result<SetId, InterpError> {
        match self.terms[term as usize].clone() {
            TNode::Var(i) => {
                let s = self.lookup(env, i)?;
                Ok(self.restrict(s, cap))
            }
            TNode::Free(n) => {
                let s = self.free.get(&n).copied().unwrap_or(self.empty_set);
                Ok(self.restrict(s, cap))
            }
            TNode::Bot => Ok(self.empty_set),
            _ => Ok(self.intern_set(LazySet::Interp { term, env, cap })),
        }
    }

    // ---- the generator's injection restricted to G_K -----------------------

    fn unapply(&mut self, e: ElId) -> Option<Preimage> {
        if let Some(hit) = self.unap.get(&e) {
            return hit.clone();
        }
        let res = match self.els[e as usize].clone() {
            WebElement::Atom(_) => None,
            WebElement::Pair(p) => {
                let mut arg: Vec<ElId> = p.arg.iter().map(|x| self.intern_el(x.clone())).collect();
                arg.sort_unstable();
                let x = self.intern_el(p.result.clone());
                Some((arg.into(), x))
            }
        };
        self.unap.insert(e, res.clone());
        res
    }

    fn i_apply(&mut self, arg: &[ElId], x: ElId) -> ElId {
        let mut sorted = arg.to_vec();
        sorted.sort_unstable();
        let key: (Rc<[ElId]>, ElId) = (sorted.into(), x);
        if let Some(&v) = self.base_fwd.get(&key) {
            return v;
        }
        let set: BTreeSet<WebElement> = key.0.iter().map(|&a| self.els[a as usize].clone()).collect();
        let pair = WebElement::pair(set, self.els[x as usize].clone());
        let id = self.intern_el(pair);
        self.unap.insert(id, Some(key));
        id
    }

    fn stratum(&mut self, r: u8) -> Result<Vec<ElId>, InterpError> {
        if self.strata.is_none() {
            let b = self.budget.with_rank(self.k.saturating_sub(1) as usize);
            let levels = strata(self.web, &b, &self.limits)?;
            let ids = levels.into_iter().map(|l| l.into_iter().map(|e| self.intern_el(e)).collect()).collect();
            self.strata = Some(ids);
        }
        Ok(self.strata.as_ref().expect("computed")[r as usize].clone())
    }

    // ---- goals -----------------------------------------------------------

    fn tick(&mut self) -> Result<(), InterpError> {
        self.steps += 1;
        if self.steps > STEP_LIMIT {
            return Err(InterpError::StepLimit(STEP_LIMIT));
        }
        Ok(())
    }

    fn goal(&self, term: TermId, env: EnvId, args: Vec<SetId>, caps: Vec<u8>, exact: Option<ElId>) -> Goal {
        let mut caps = caps;
        for c in caps.iter_mut() {
            *c = (*c).min(self.k);
        }
        for i in 1..caps.len() {
            caps[i] = caps[i].min(caps[i - 1]);
        }
        Goal { term, env, args: args.into(), caps: caps.into(), exact }
    }

    fn flatten(&mut self, g: &Goal, p: TermId, q: TermId) -> Result<Goal, InterpError> {
        let qs = self.interp_set(q, g.env, self.k)?;
        let mut args = vec![qs];
        args.extend(g.args.iter().copied());
        let mut caps = vec![self.k];
        caps.extend(g.caps.iter().copied());
        Ok(self.goal(p, g.env, args, caps, None))
    }

    /// Head `λx.body` with at least one argument and `caps[0] ≥ 1`.
    fn beta(&mut self, g: &Goal, body: TermId) -> Goal {
        let c0 = g.caps[0];
        let x = self.restrict(g.args[0], c0 - 1);
        let env = self.push_env(g.env, x);
        let mut caps = vec![g.caps[1].min(c0 - 1)];
        caps.extend(g.caps[2..].iter().copied());
        self.goal(body, env, g.args[1..].to_vec(), caps, None)
    }

    /// Head `λx.body` with `caps[0] = 0`: one goal per generator row
    /// `j(b, β) = v` with `b ⊆ S₁`, fixing the next chain element to `β`.
    fn row_goals(&mut self, g: &Goal, body: TermId) -> Result<Vec<Goal>, InterpError> {
        let rows = self.base_rows.clone();
        let mut out = Vec::new();
        for (b, beta, _) in rows {
            if !self.subset(&b, g.args[0])? {
                continue;
            }
            let bs = self.explicit(b.to_vec());
            let env = self.push_env(g.env, bs);
            let mut caps = vec![0];
            caps.extend(g.caps[2..].iter().copied());
            out.push(self.goal(body, env, g.args[1..].to_vec(), caps, Some(beta)));
        }
        Ok(out)
    }

    fn head_set(&mut self, g: &Goal) -> Result<Option<SetId>, InterpError> {
        Ok(match self.terms[g.term as usize].clone() {
            TNode::Var(i) => Some(self.lookup(g.env, i)?),
            TNode::Free(n) => Some(self.free.get(&n).copied().unwrap_or(self.empty_set)),
            _ => None,
        })
    }

    /// Follows `γ` down the spine; the final chain element if every layer
    /// decomposes within the caps and every argument set is large enough.
    fn peel(&mut self, gamma: ElId, g: &Goal) -> Result<Option<ElId>, InterpError> {
        if self.rank(gamma) > g.caps[0] {
            return Ok(None);
        }
        let mut layers = Vec::with_capacity(g.args.len());
        let mut e = gamma;
        for i in 0..g.args.len() {
            let Some((a, next)) = self.unapply(e) else { return Ok(None) };
            if self.rank(next) > g.caps[i + 1] {
                return Ok(None);
            }
            layers.push(a);
            e = next;
        }
        for (a, &s) in layers.iter().zip(g.args.iter()) {
            if !self.subset(a, s)? {
                return Ok(None);
            }
        }
        Ok(Some(e))
    }

    fn subset(&mut self, xs: &[ElId], s: SetId) -> Result<bool, InterpError> {
        for &x in xs {
            if !self.mem_set(x, s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn mem_set(&mut self, x: ElId, s: SetId) -> Result<bool, InterpError> {
        match self.sets[s as usize].clone() {
            LazySet::Explicit(xs) => Ok(xs.binary_search(&x).is_ok()),
            LazySet::Interp { term, env, cap } => {
                let r = self.rank(x);
                if r > cap {
                    return Ok(false);
                }
                let g = self.goal(term, env, vec![], vec![r], None);
                self.mem(x, g)
            }
        }
    }

    fn mem(&mut self, alpha: ElId, g: Goal) -> Result<bool, InterpError> {
        if self.rank(alpha) > *g.caps.last().expect("caps") {
            return Ok(false);
        }
        let key = (g, alpha);
        if let Some(&b) = self.mem_memo.get(&key) {
            return Ok(b);
        }
        if let Some(&d) = self.active_mem.get(&key) {
            self.low = self.low.min(d);
            return Ok(false);
        }
        self.tick()?;
        self.depth += 1;
        let d = self.depth;
        self.active_mem.insert(key.clone(), d);
        let saved = self.low;
        self.low = usize::MAX;
        let res = self.mem_rules(alpha, &key.0);
        self.active_mem.remove(&key);
        self.depth -= 1;
        let my_low = self.low;
        let own = if my_low >= d { usize::MAX } else { my_low };
        self.low = saved.min(own);
        let res = res?;
        if res || own == usize::MAX {
            self.mem_memo.insert(key, res);
        }
        Ok(res)
    }

    fn mem_rules(&mut self, alpha: ElId, g: &Goal) -> Result<bool, InterpError> {
        if let Some(gamma) = g.exact {
            if self.peel(gamma, g)? != Some(alpha) {
                return Ok(false);
            }
            let r = self.rank(gamma);
            let head = self.goal(g.term, g.env, vec![], vec![r], None);
            return self.mem(gamma, head);
        }
        if let Some(s) = self.head_set(g)? {
            return match self.sets[s as usize].clone() {
                LazySet::Explicit(xs) => {
                    for &x in xs.iter() {
                        if self.peel(x, g)? == Some(alpha) {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                }
                LazySet::Interp { term, env, cap } => {
                    let mut caps = g.caps.to_vec();
                    caps[0] = caps[0].min(cap);
                    let next = self.goal(term, env, g.args.to_vec(), caps, None);
                    self.mem(alpha, next)
                }
            };
        }
        match self.terms[g.term as usize].clone() {
            TNode::Bot => Ok(false),
            TNode::App(p, q) => {
                let next = self.flatten(g, p, q)?;
                self.mem(alpha, next)
            }
            TNode::Lam(body) if g.args.is_empty() => {
                if self.rank(alpha) > g.caps[0] {
                    return Ok(false);
                }
                let Some((b, beta)) = self.unapply(alpha) else { return Ok(false) };
                let bs = self.explicit(b.to_vec());
                let env = self.push_env(g.env, bs);
                let r = self.rank(beta);
                let next = self.goal(body, env, vec![], vec![r], None);
                self.mem(beta, next)
            }
            TNode::Lam(body) if g.caps[0] >= 1 => {
                let next = self.beta(g, body);
                self.mem(alpha, next)
            }
            TNode::Lam(body) => {
                for next in self.row_goals(g, body)? {
                    if self.mem(alpha, next)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            TNode::Var(_) | TNode::Free(_) => unreachable!("handled by head_set"),
        }
    }

    fn out(&mut self, g: Goal) -> Result<Rc<[ElId]>, InterpError> {
        if let Some(hit) = self.out_memo.get(&g) {
            return Ok(hit.clone());
        }
        if let Some(entry) = self.active_out.get_mut(&g) {
            entry.2 = true;
            let (d, partial) = (entry.0, entry.1.clone());
            self.low = self.low.min(d);
            return Ok(partial);
        }
        self.tick()?;
        self.depth += 1;
        let d = self.depth;
        self.active_out.insert(g.clone(), (d, Rc::from(Vec::new()), false));
        let saved = self.low;
        let mut outer_low = usize::MAX;
        let result = loop {
            self.low = usize::MAX;
            let res = self.out_rules(&g);
            let my_low = self.low;
            if my_low < d {
                outer_low = outer_low.min(my_low);
            }
            let res = match res {
                Ok(r) => r,
                Err(e) => {
                    self.active_out.remove(&g);
                    self.depth -= 1;
                    self.low = saved;
                    return Err(e);
                }
            };
            let entry = self.active_out.get_mut(&g).expect("active");
            let mut merged: Vec<ElId> = res.iter().chain(entry.1.iter()).copied().collect();
            merged.sort_unstable();
            merged.dedup();
            let changed = merged.len() != entry.1.len();
            let touched = entry.2;
            entry.1 = merged.into();
            entry.2 = false;
            if !(touched && changed) {
                break entry.1.clone();
            }
        };
        self.active_out.remove(&g);
        self.depth -= 1;
        self.low = saved.min(outer_low);
        if outer_low == usize::MAX {
            self.out_memo.insert(g, result.clone());
        }
        Ok(result)
    }

    fn out_rules(&mut self, g: &Goal) -> Result<Vec<ElId>, InterpError> {
        if let Some(gamma) = g.exact {
            let Some(fin) = self.peel(gamma, g)? else { return Ok(vec![]) };
            let r = self.rank(gamma);
            let head = self.goal(g.term, g.env, vec![], vec![r], None);
            return Ok(if self.mem(gamma, head)? { vec![fin] } else { vec![] });
        }
        if let Some(s) = self.head_set(g)? {
            return match self.sets[s as usize].clone() {
                LazySet::Explicit(xs) => {
                    let mut out = Vec::new();
                    for &x in xs.iter() {
                        if let Some(f) = self.peel(x, g)? {
                            out.push(f);
                        }
                    }
                    Ok(out)
                }
                LazySet::Interp { term, env, cap } => {
                    let mut caps = g.caps.to_vec();
                    caps[0] = caps[0].min(cap);
                    let next = self.goal(term, env, g.args.to_vec(), caps, None);
                    Ok(self.out(next)?.to_vec())
                }
            };
        }
        match self.terms[g.term as usize].clone() {
            TNode::Bot => Ok(vec![]),
            TNode::App(p, q) => {
                let next = self.flatten(g, p, q)?;
                Ok(self.out(next)?.to_vec())
            }
            TNode::Lam(body) if g.args.is_empty() => self.out_lambda(g, body),
            TNode::Lam(body) if g.caps[0] >= 1 => {
                let next = self.beta(g, body);
                Ok(self.out(next)?.to_vec())
            }
            TNode::Lam(body) => {
                let mut out = Vec::new();
                for next in self.row_goals(g, body)? {
                    out.extend(self.out(next)?.iter().copied());
                }
                Ok(out)
            }
            TNode::Var(_) | TNode::Free(_) => unreachable!("handled by head_set"),
        }
    }

    /// The whole of `|λx.body| ∩ E_c`: every `i(b, β)` with `b ⊆ E_{c-1}`
    /// and `β ∈ |body|_{x:=b} ∩ E_{c-1}`, or generator rows when `c = 0`.
    fn out_lambda(&mut self, g: &Goal, body: TermId) -> Result<Vec<ElId>, InterpError> {
        let c = g.caps[0];
        let mut out = Vec::new();
        if c == 0 {
            for (b, beta, v) in self.base_rows.clone() {
                let bs = self.explicit(b.to_vec());
                let env = self.push_env(g.env, bs);
                let next = self.goal(body, env, vec![], vec![0], None);
                if self.mem(beta, next)? {
                    out.push(v);
                }
            }
            return Ok(out);
        }
        let level = self.stratum(c - 1)?;
        if level.len() > SUBSET_LIMIT_BITS {
            return Err(InterpError::SubsetLimit { elements: level.len(), limit: SUBSET_LIMIT_BITS });
        }
        for mask in 0u64..(1u64 << level.len()) {
            let b: Vec<ElId> = (0..level.len()).filter(|i| mask >> i & 1 == 1).map(|i| level[i]).collect();
            let bs = self.explicit(b.clone());
            let env = self.push_env(g.env, bs);
            let next = self.goal(body, env, vec![], vec![c - 1], None);
            for &beta in self.out(next)?.iter() {
                out.push(self.i_apply(&b, beta));
            }
        }
        Ok(out)
    }

    // ---- public entry points ----------------------------------------------

    fn stack_env(&mut self, stack: &[BTreeSet<WebElement>]) -> Result<EnvId, InterpError> {
        let mut env = self.root_env;
        for s in stack {
            let mut ids = Vec::new();
            for x in s {
                if !self.budget.admits(x) {
                    return Err(InterpError::ForeignElement(x.to_string()));
                }
                ids.push(self.intern_el(x.clone()));
            }
            let sid = self.explicit(ids);
            env = self.push_env(env, sid);
        }
        Ok(env)
    }

    /// `|t| ∩ E_cap` with bound variables taken from `stack` (innermost last).
    pub(crate) fn out_in(
        &mut self,
        t: &Term,
        stack: &[BTreeSet<WebElement>],
        cap: usize,
    ) -> Result<Vec<WebElement>, InterpError> {
        let term = self.intern_term(t);
        let env = self.stack_env(stack)?;
        let g = self.goal(term, env, vec![], vec![cap as u8], None);
        let ids = self.out(g)?;
        let mut out: Vec<WebElement> = ids.iter().map(|&i| self.els[i as usize].clone()).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub(crate) fn mem_in(&mut self, x: &WebElement, t: &Term, stack: &[BTreeSet<WebElement>]) -> Result<bool, InterpError> {
        if !self.budget.admits(x) {
            return Ok(false);
        }
        let term = self.intern_term(t);
        let env = self.stack_env(stack)?;
        let id = self.intern_el(x.clone());
        let g = self.goal(term, env, vec![], vec![self.rank(id)], None);
        self.mem(id, g)
    }

    pub(crate) fn out_term(&mut self, t: &Term) -> Result<Vec<WebElement>, InterpError> {
        self.out_in(t, &[], self.k as usize)
    }

    pub(crate) fn mem_term(&mut self, x: &WebElement, t: &Term) -> Result<bool, InterpError> {
        self.mem_in(x, t, &[])
    }
}
