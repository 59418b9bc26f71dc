//! Nameless λ-terms with a bottom constant.

use std::collections::BTreeSet;
use std::fmt;

/// An untyped λ-term.
///
/// Bound variables are de Bruijn indices (0 is the innermost binder), so
/// α-equivalent surface terms are structurally identical. Free variables keep
/// their surface name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Free(String),
    App(Box<Term>, Box<Term>),
    Lam(Box<Term>),
    Bottom,
}

impl Term {
    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(Box::new(body))
    }

    /// `λ^n. body`
    pub fn lams(n: usize, body: Term) -> Term {
        (0..n).fold(body, |b, _| Term::lam(b))
    }

    /// Left-associated application of `head` to `args`.
    pub fn apps(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    pub fn free(name: &str) -> Term {
        Term::Free(name.to_string())
    }

    /// True when the term has no free variables (named or dangling indices).
    pub fn is_closed(&self) -> bool {
        fn go(t: &Term, depth: usize) -> bool {
            match t {
                Term::Var(i) => *i < depth,
                Term::Free(_) => false,
                Term::App(f, a) => go(f, depth) && go(a, depth),
                Term::Lam(b) => go(b, depth + 1),
                Term::Bottom => true,
            }
        }
        go(self, 0)
    }

    pub fn free_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Free(n) => {
                out.insert(n.clone());
            }
            Term::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
            Term::Lam(b) => b.collect_free(out),
            Term::Var(_) | Term::Bottom => {}
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Lam(b) => 1 + b.size(),
            _ => 1,
        }
    }

    /// Splits `h M1 … Mk` into the head and its arguments.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut t = self;
        while let Term::App(f, a) = t {
            args.push(a.as_ref());
            t = f;
        }
        args.reverse();
        (t, args)
    }

    /// Adds `by` to every index `>= cutoff`.
    pub fn shift(&self, by: isize, cutoff: usize) -> Term {
        match self {
            Term::Var(i) if *i >= cutoff => Term::Var((*i as isize + by) as usize),
            Term::Var(i) => Term::Var(*i),
            Term::Free(n) => Term::Free(n.clone()),
            Term::App(f, a) => Term::app(f.shift(by, cutoff), a.shift(by, cutoff)),
            Term::Lam(b) => Term::lam(b.shift(by, cutoff + 1)),
            Term::Bottom => Term::Bottom,
        }
    }

    /// Substitutes `val` for index `depth` and lowers the indices above it.
    /// `val` is given relative to the binder being eliminated.
    pub(crate) fn subst_top(&self, val: &Term) -> Term {
        fn go(t: &Term, depth: usize, val: &Term) -> Term {
            match t {
                Term::Var(i) if *i == depth => val.shift(depth as isize, 0),
                Term::Var(i) if *i > depth => Term::Var(i - 1),
                Term::Var(i) => Term::Var(*i),
                Term::Free(n) => Term::Free(n.clone()),
                Term::App(f, a) => Term::app(go(f, depth, val), go(a, depth, val)),
                Term::Lam(b) => Term::lam(go(b, depth + 1, val)),
                Term::Bottom => Term::Bottom,
            }
        }
        go(self, 0, val)
    }

    /// True when index `idx` (relative to this term) occurs free.
    pub fn has_index(&self, idx: usize) -> bool {
        match self {
            Term::Var(i) => *i == idx,
            Term::App(f, a) => f.has_index(idx) || a.has_index(idx),
            Term::Lam(b) => b.has_index(idx + 1),
            Term::Free(_) | Term::Bottom => false,
        }
    }
}

const BASE_NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

/// Name given to the binder introduced at `depth`, skipping names that clash
/// with free variables of the printed term.
pub(crate) fn binder_name(depth: usize, avoid: &BTreeSet<String>) -> String {
    let mut k = 0usize;
    let mut seen = 0usize;
    loop {
        let candidate = if k < BASE_NAMES.len() {
            BASE_NAMES[k].to_string()
        } else {
            let round = k / BASE_NAMES.len();
            format!("{}{}", BASE_NAMES[k % BASE_NAMES.len()], round)
        };
        k += 1;
        if avoid.contains(&candidate) {
            continue;
        }
        if seen == depth {
            return candidate;
        }
        seen += 1;
    }
}

pub(crate) struct Printer<'a> {
    avoid: &'a BTreeSet<String>,
}

impl<'a> Printer<'a> {
    pub(crate) fn new(avoid: &'a BTreeSet<String>) -> Self {
        Printer { avoid }
    }

    pub(crate) fn var(&self, idx: usize, depth: usize) -> String {
        if idx < depth {
            binder_name(depth - 1 - idx, self.avoid)
        } else {
            // dangling index, only reachable for open subterms
            format!("#{}", idx - depth)
        }
    }

    pub(crate) fn term(&self, t: &Term, depth: usize, out: &mut String) {
        match t {
            Term::Lam(_) => {
                out.push('\\');
                let mut body = t;
                let mut d = depth;
                let mut first = true;
                while let Term::Lam(b) = body {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    out.push_str(&binder_name(d, self.avoid));
                    d += 1;
                    body = b;
                }
                out.push('.');
                self.term(body, d, out);
            }
            _ => self.app(t, depth, out),
        }
    }

    fn app(&self, t: &Term, depth: usize, out: &mut String) {
        match t {
            Term::App(f, a) => {
                self.app(f, depth, out);
                out.push(' ');
                self.atom(a, depth, out);
            }
            _ => self.atom(t, depth, out),
        }
    }

    fn atom(&self, t: &Term, depth: usize, out: &mut String) {
        match t {
            Term::Var(i) => out.push_str(&self.var(*i, depth)),
            Term::Free(n) => out.push_str(n),
            Term::Bottom => out.push_str("_|_"),
            Term::App(..) | Term::Lam(_) => {
                out.push('(');
                self.term(t, depth, out);
                out.push(')');
            }
        }
    }
}

/// Canonical surface syntax; reparses to the same term.
pub fn print_term(t: &Term) -> String {
    let avoid = t.free_names();
    let mut out = String::new();
    Printer::new(&avoid).term(t, 0, &mut out);
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}
