use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::rc::Rc;

use super::{Env, InterpError};
use crate::lambda::Term;
use crate::web::FinitePair;

struct FiniteEval<'a, A: Ord> {
    rows: Vec<(&'a BTreeSet<A>, &'a A, &'a A)>,
    env: &'a Env<A>,
    memo: BTreeMap<(usize, Vec<Rc<BTreeSet<A>>>), Rc<BTreeSet<A>>>,
}

impl<A: Ord + Clone + fmt::Display> FiniteEval<'_, A> {
    fn eval(&mut self, t: &Term, stack: &mut Vec<Rc<BTreeSet<A>>>) -> Result<Rc<BTreeSet<A>>, InterpError> {
        let key = (t as *const Term as usize, stack.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let out: BTreeSet<A> = match t {
            Term::Var(i) => {
                let Some(pos) = stack.len().checked_sub(i + 1) else {
                    return Err(InterpError::DanglingIndex(*i));
                };
                return Ok(stack[pos].clone());
            }
            Term::Free(name) => self.env.get(name).cloned().unwrap_or_default(),
            Term::Bottom => BTreeSet::new(),
            Term::App(p, q) => {
                let ps = self.eval(p, stack)?;
                let qs = self.eval(q, stack)?;
                self.rows
                    .iter()
                    .filter(|(a, _, v)| ps.contains(v) && a.is_subset(&qs))
                    .map(|(_, x, _)| (*x).clone())
                    .collect()
            }
            Term::Lam(body) => {
                let mut out = BTreeSet::new();
                for i in 0..self.rows.len() {
                    let (a, x, v) = self.rows[i];
                    stack.push(Rc::new(a.clone()));
                    let inner = self.eval(body, stack);
                    stack.pop();
                    if inner?.contains(x) {
                        out.insert(v.clone());
                    }
                }
                out
            }
        };
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        Ok(out)
    }
}

/// `|t|^p_ρ` over a finite pair, by the three interpretation clauses.
pub fn interp_finite<A: Ord + Clone + fmt::Display>(
    p: &FinitePair<A>,
    t: &Term,
    env: &Env<A>,
) -> Result<BTreeSet<A>, InterpError> {
    if let Some(x) = env.elements().iter().find(|x| !p.contains(x)) {
        return Err(InterpError::ForeignElement(x.to_string()));
    }
    let rows = p.rows().map(|((a, x), v)| (a, x, v)).collect();
    let mut ev = FiniteEval { rows, env, memo: BTreeMap::new() };
    let out = ev.eval(t, &mut Vec::new())?;
    Ok((*out).clone())
}
