use std::collections::BTreeSet;

use super::engine::Engine;
use super::slice::with_engine;
use super::{interp_finite, Env, InterpError};
use crate::completion::{i_apply, unapply, Budget, Limits, WebElement};
use crate::lambda::{builtin, Term};
use crate::web::{FinitePair, Pair, Unapply, Web, WebError};

type Witness = FinitePair<WebElement>;

fn web_err(e: WebError) -> InterpError {
    InterpError::Completion(e.into())
}

fn row_pair(a: &BTreeSet<WebElement>, x: &WebElement, v: &WebElement) -> Result<Witness, InterpError> {
    let carrier = a.iter().chain([x, v]).cloned();
    FinitePair::new(carrier, [((a.clone(), x.clone()), v.clone())]).map_err(web_err)
}

struct Extractor<'e, 'w> {
    engine: &'e mut Engine<'w>,
    web: &'w Web,
    budget: Budget,
    env: &'e Env<WebElement>,
}

impl Extractor<'_, '_> {
    /// `(a, x)` with `i(a, x) = v`, searching the generator's rows when the
    /// web cannot invert itself.
    fn split(&self, v: &WebElement) -> Option<(BTreeSet<WebElement>, WebElement)> {
        match unapply(self.web, v) {
            Unapply::Preimage(a, x) => Some((a, x)),
            Unapply::NoPreimage => None,
            Unapply::Unsupported => {
                let atom = v.as_atom()?;
                self.web.rows_over(self.budget.atom_scope()).into_iter().find(|(_, w)| w == atom).map(|((a, x), _)| {
                    (a.into_iter().map(WebElement::Atom).collect(), WebElement::Atom(x))
                })
            }
        }
    }

    fn mem(&mut self, x: &WebElement, t: &Term, stack: &[BTreeSet<WebElement>]) -> Result<bool, InterpError> {
        self.engine.mem_in(x, t, stack)
    }

    fn extract(&mut self, x: &WebElement, t: &Term, stack: &mut Vec<BTreeSet<WebElement>>) -> Result<Witness, InterpError> {
        match t {
            Term::Var(_) | Term::Free(_) => {
                Ok(FinitePair::new([x.clone()], []).map_err(web_err)?)
            }
            Term::Bottom => Err(InterpError::NotInSlice(x.to_string())),
            Term::Lam(body) => {
                let (a, y) = self.split(x).ok_or_else(|| InterpError::NotInSlice(x.to_string()))?;
                stack.push(a.clone());
                let inner = self.extract(&y, body, stack);
                stack.pop();
                inner?.union(&row_pair(&a, &y, x)?).map_err(web_err)
            }
            Term::App(p, q) => {
                let (a, gamma) = self.app_route(x, p, q, stack)?;
                let mut w = self.extract(&gamma, p, stack)?;
                for y in &a {
                    w = w.union(&self.extract(y, q, stack)?).map_err(web_err)?;
                }
                w.union(&row_pair(&a, x, &gamma)?).map_err(web_err)
            }
        }
    }

    /// Some `a ⊆ |q|` with `γ = i(a, x) ∈ |p|`, all within the budget.
    fn app_route(
        &mut self,
        x: &WebElement,
        p: &Term,
        q: &Term,
        stack: &[BTreeSet<WebElement>],
    ) -> Result<(BTreeSet<WebElement>, WebElement), InterpError> {
        if let Some(atom) = x.as_atom() {
            for ((a, y), v) in self.web.rows_over(self.budget.atom_scope()) {
                if &y != atom {
                    continue;
                }
                let a: BTreeSet<WebElement> = a.into_iter().map(WebElement::Atom).collect();
                let v = WebElement::Atom(v);
                if self.mem(&v, p, stack)? && self.subset(&a, q, stack)? {
                    return Ok((a, v));
                }
            }
        }
        let k = self.budget.max_rank();
        if x.rank() < k && matches!(p, Term::Lam(_)) {
            let mut a: BTreeSet<WebElement> = self.engine.out_in(q, stack, k - 1)?.into_iter().collect();
            if self.mem(&i_apply(self.web, &a, x), p, stack)? {
                for y in a.clone() {
                    a.remove(&y);
                    if !self.mem(&i_apply(self.web, &a, x), p, stack)? {
                        a.insert(y);
                    }
                }
                let gamma = i_apply(self.web, &a, x);
                return Ok((a, gamma));
            }
        }
        for gamma in self.engine.out_in(p, stack, k)? {
            let Some((a, y)) = self.split(&gamma) else { continue };
            if &y == x && self.subset(&a, q, stack)? {
                return Ok((a, gamma));
            }
        }
        Err(InterpError::NotInSlice(x.to_string()))
    }

    fn subset(&mut self, a: &BTreeSet<WebElement>, q: &Term, stack: &[BTreeSet<WebElement>]) -> Result<bool, InterpError> {
        for y in a {
            if !self.mem(y, q, stack)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn run(&mut self, x: &WebElement, t: &Term) -> Result<Witness, InterpError> {
        if !self.engine.mem_term(x, t)? {
            return Err(InterpError::NotInSlice(x.to_string()));
        }
        let w = self.extract(x, t, &mut Vec::new())?;
        let env = self.env.restrict(w.atoms());
        if !interp_finite(&w, t, &env)?.contains(x) {
            return Err(InterpError::NotInSlice(x.to_string()));
        }
        Ok(w)
    }
}

/// A finite subpair of the completion whose own interpretation of `t`
/// already contains `x`; `x` must lie in the slice at budget `b`.
pub fn extract_witness_subpair(
    web: &Web,
    t: &Term,
    env: &Env<WebElement>,
    x: &WebElement,
    b: &Budget,
    limits: &Limits,
) -> Result<Witness, InterpError> {
    with_engine(web, b, env, limits, |engine| {
        let budget = engine.budget().clone();
        Extractor { engine, web, budget, env }.run(x, t)
    })
}

/// Compares `|Ω|` with `{α : ∃a ⊆ |δ|, j(a, α) ∈ a}` over a finite pair.
pub fn omega_characterization_check(p: &Pair) -> bool {
    let env = Env::empty();
    let omega = interp_finite(p, &builtin("Omega").expect("builtin"), &env).expect("closed term");
    let delta = interp_finite(p, &builtin("Delta").expect("builtin"), &env).expect("closed term");
    let characterized: BTreeSet<_> = p
        .rows()
        .filter(|((a, _), v)| a.is_subset(&delta) && a.contains(v))
        .map(|((_, x), _)| x.clone())
        .collect();
    omega == characterized
}
