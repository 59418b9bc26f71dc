use std::collections::BTreeSet;

use super::{Env, InterpError};
use crate::completion::{unapply, WebElement};
use crate::lambda::{normalize, Normalized, Term};
use crate::web::{Effectivity, Unapply, Web};

struct Decider<'a> {
    web: &'a Web,
    env: &'a Env<WebElement>,
}

impl Decider<'_> {
    fn split(&self, e: &WebElement) -> Result<Option<(BTreeSet<WebElement>, WebElement)>, InterpError> {
        match unapply(self.web, e) {
            Unapply::Preimage(a, x) => Ok(Some((a, x))),
            Unapply::NoPreimage => Ok(None),
            Unapply::Unsupported => Err(InterpError::Unsupported(self.web.name())),
        }
    }

    fn mem(&self, x: &WebElement, t: &Term, stack: &mut Vec<BTreeSet<WebElement>>) -> Result<bool, InterpError> {
        if let Term::Lam(body) = t {
            let Some((a, y)) = self.split(x)? else { return Ok(false) };
            stack.push(a);
            let res = self.mem(&y, body, stack);
            stack.pop();
            return res;
        }
        let (head, args) = t.spine();
        let values = match head {
            Term::Var(i) => {
                let pos = stack.len().checked_sub(i + 1).ok_or(InterpError::DanglingIndex(*i))?;
                stack[pos].clone()
            }
            Term::Free(name) => self.env.get(name).cloned().unwrap_or_default(),
            Term::Bottom => return Ok(false),
            Term::App(..) | Term::Lam(_) => unreachable!("normal term with a λ head applied"),
        };
        'gamma: for gamma in &values {
            let mut layers = Vec::with_capacity(args.len());
            let mut e = gamma.clone();
            for _ in 0..args.len() {
                let Some((a, next)) = self.split(&e)? else { continue 'gamma };
                layers.push(a);
                e = next;
            }
            if &e != x {
                continue;
            }
            for (a, m) in layers.iter().zip(&args) {
                for y in a {
                    if !self.mem(y, m, stack)? {
                        continue 'gamma;
                    }
                }
            }
            return Ok(true);
        }
        Ok(false)
    }
}

/// Whether `x` belongs to the interpretation of `t` in the whole completion.
///
/// `t` is normalized with `fuel` steps first; the web must decide the range
/// of its generator.
pub fn decide_member_normal(
    web: &Web,
    x: &WebElement,
    t: &Term,
    env: &Env<WebElement>,
    fuel: usize,
) -> Result<bool, InterpError> {
    if web.effectivity() != Effectivity::Effective {
        return Err(InterpError::Unsupported(web.name()));
    }
    let nf = match normalize(t, fuel) {
        Normalized::Normal(nf) => nf,
        Normalized::OutOfFuel(_) => return Err(InterpError::NotNormal { fuel }),
    };
    if x.atoms().iter().any(|a| !web.contains(a)) {
        return Ok(false);
    }
    Decider { web, env }.mem(x, &nf, &mut Vec::new())
}
