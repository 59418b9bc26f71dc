//! Leftmost-outermost β-reduction under explicit fuel.

use std::fmt;

use super::term::{Printer, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Normal(Term),
    OutOfFuel(Term),
}

impl Normalized {
    pub fn normal(self) -> Option<Term> {
        match self {
            Normalized::Normal(t) => Some(t),
            Normalized::OutOfFuel(_) => None,
        }
    }
}

/// Contracts the leftmost-outermost redex, if any.
pub fn step(t: &Term) -> Option<Term> {
    match t {
        Term::App(f, a) => {
            if let Term::Lam(body) = f.as_ref() {
                return Some(body.subst_top(a));
            }
            if let Some(f2) = step(f) {
                return Some(Term::App(Box::new(f2), a.clone()));
            }
            step(a).map(|a2| Term::App(f.clone(), Box::new(a2)))
        }
        Term::Lam(b) => step(b).map(Term::lam),
        _ => None,
    }
}

pub fn has_redex(t: &Term) -> bool {
    match t {
        Term::App(f, a) => matches!(f.as_ref(), Term::Lam(_)) || has_redex(f) || has_redex(a),
        Term::Lam(b) => has_redex(b),
        _ => false,
    }
}

/// Reduces `t` leftmost-outermost; `fuel` bounds the number of β-steps.
pub fn normalize(t: &Term, fuel: usize) -> Normalized {
    let mut cur = t.clone();
    let mut left = fuel;
    loop {
        match step(&cur) {
            None => return Normalized::Normal(cur),
            Some(_) if left == 0 => return Normalized::OutOfFuel(cur),
            Some(next) => {
                cur = next;
                left -= 1;
            }
        }
    }
}

/// The head variable of a head normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarRef {
    /// de Bruijn index counted from the innermost prefix binder
    Bound(usize),
    Free(String),
}

/// `λx₁…xₙ. y M₁ … M_k`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub prefix_len: usize,
    pub head: VarRef,
    pub args: Vec<Term>,
}

/// Where the head of an hnf points, independent of the prefix length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HeadPosition {
    /// 1-based position of a prefix binder, counted from the outside
    Binder(usize),
    /// variable bound above the hnf (de Bruijn index relative to the hnf)
    Outer(usize),
    Free(String),
}

impl Hnf {
    pub fn head_position(&self) -> HeadPosition {
        match &self.head {
            VarRef::Bound(i) if *i < self.prefix_len => HeadPosition::Binder(self.prefix_len - i),
            VarRef::Bound(i) => HeadPosition::Outer(i - self.prefix_len),
            VarRef::Free(n) => HeadPosition::Free(n.clone()),
        }
    }

    /// k − n
    pub fn balance(&self) -> isize {
        self.args.len() as isize - self.prefix_len as isize
    }

    pub fn to_term(&self) -> Term {
        let head = match &self.head {
            VarRef::Bound(i) => Term::Var(*i),
            VarRef::Free(n) => Term::Free(n.clone()),
        };
        Term::lams(self.prefix_len, Term::apps(head, self.args.iter().cloned()))
    }
}

impl fmt::Display for Hnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeadOutcome {
    Hnf(Hnf),
    /// Inconclusive: either the fuel ran out or the head is `⊥`.
    NoHnfWithinFuel,
}

/// Head reduction to a head normal form.
pub fn head_normal_form(t: &Term, fuel: usize) -> HeadOutcome {
    let mut prefix = 0usize;
    let mut cur = t.clone();
    let mut left = fuel;
    loop {
        while let Term::Lam(b) = cur {
            prefix += 1;
            cur = *b;
        }
        let (head, args) = cur.spine();
        match head {
            Term::Var(i) => {
                let head = VarRef::Bound(*i);
                let args = args.into_iter().cloned().collect();
                return HeadOutcome::Hnf(Hnf { prefix_len: prefix, head, args });
            }
            Term::Free(n) => {
                let head = VarRef::Free(n.clone());
                let args = args.into_iter().cloned().collect();
                return HeadOutcome::Hnf(Hnf { prefix_len: prefix, head, args });
            }
            Term::Bottom => return HeadOutcome::NoHnfWithinFuel,
            Term::Lam(body) => {
                if left == 0 {
                    return HeadOutcome::NoHnfWithinFuel;
                }
                left -= 1;
                let mut rest = args.into_iter();
                let first = rest.next().expect("lambda head with arguments");
                let reduced = body.subst_top(first);
                cur = Term::apps(reduced, rest.cloned());
            }
            Term::App(..) => unreachable!("spine head is never an application"),
        }
    }
}

/// Same head position and same k − n.
pub fn hnf_equivalent(a: &Hnf, b: &Hnf) -> bool {
    a.head_position() == b.head_position() && a.balance() == b.balance()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separability {
    Separable,
    Equivalent,
    Unknown,
}

/// Removes η-redexes `λx.M x` with `x` not free in `M`, bottom-up.
pub fn eta_normal(t: &Term) -> Term {
    match t {
        Term::App(f, a) => Term::app(eta_normal(f), eta_normal(a)),
        Term::Lam(b) => {
            let body = eta_normal(b);
            if let Term::App(f, a) = &body {
                if **a == Term::Var(0) && !f.has_index(0) {
                    return f.shift(-1, 0);
                }
            }
            Term::lam(body)
        }
        other => other.clone(),
    }
}

/// Böhm's criteria: two normal terms are separable unless η-equivalent; two
/// hnfs are separable unless equivalent. Anything else is `Unknown`.
pub fn separability_verdict(m: &Term, n: &Term, fuel: usize) -> Separability {
    if let (Normalized::Normal(mn), Normalized::Normal(nn)) = (normalize(m, fuel), normalize(n, fuel)) {
        return if eta_normal(&mn) == eta_normal(&nn) {
            Separability::Equivalent
        } else {
            Separability::Separable
        };
    }
    match (head_normal_form(m, fuel), head_normal_form(n, fuel)) {
        (HeadOutcome::Hnf(a), HeadOutcome::Hnf(b)) => {
            if hnf_equivalent(&a, &b) {
                Separability::Equivalent
            } else {
                Separability::Separable
            }
        }
        _ => Separability::Unknown,
    }
}

pub(crate) fn print_head(head: &VarRef, depth: usize, printer: &Printer<'_>) -> String {
    match head {
        VarRef::Bound(i) => printer.var(*i, depth),
        VarRef::Free(n) => n.clone(),
    }
}
