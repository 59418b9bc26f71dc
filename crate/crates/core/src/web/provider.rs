use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::atom::{Atom, AtomId};
use super::pair::{Key, Pair};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unapply<A: Ord> {
    Preimage(BTreeSet<A>, A),
    NoPreimage,
    /// the range of `j` is not decidable for this web
    Unsupported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Effectivity {
    WeaklyEffective,
    Effective,
}

/// A possibly infinite partial pair given by rules.
///
/// `apply` must be injective and, for effective providers, `unapply` its
/// exact inverse. `atoms(n)` is monotone in `n`.
pub trait WebProvider: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    fn contains(&self, a: &Atom) -> bool;
    fn apply(&self, arg: &BTreeSet<Atom>, elem: &Atom) -> Option<Atom>;
    fn unapply(&self, a: &Atom) -> Unapply<Atom>;
    fn atoms(&self, n: usize) -> BTreeSet<Atom>;
    fn effectivity(&self) -> Effectivity;

    /// Table rows whose argument atoms all lie in `scope`. The default
    /// enumerates subsets and is only usable for small scopes.
    fn rows_over(&self, scope: &BTreeSet<Atom>) -> Vec<(Key<Atom>, Atom)> {
        let atoms: Vec<&Atom> = scope.iter().collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << atoms.len().min(20)) {
            let arg: BTreeSet<Atom> =
                atoms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| (*a).clone()).collect();
            for x in &atoms {
                if let Some(v) = self.apply(&arg, x) {
                    out.push(((arg.clone(), (*x).clone()), v));
                }
            }
        }
        out
    }
}

fn indexed(prefix: &str, n: usize) -> Atom {
    Atom::named(&format!("{prefix}{n}"))
}

/// Splits `a12` into (`a`, 12) for untagged, indexed atoms.
fn split_indexed(a: &Atom) -> Option<(&str, usize)> {
    if a.tag != 0 {
        return None;
    }
    let AtomId::Name(name) = &a.id else { return None };
    let digits = name.find(|c: char| c.is_ascii_digit())?;
    let (p, rest) = name.split_at(digits);
    if rest.starts_with('0') {
        return None;
    }
    rest.parse().ok().filter(|&n| n >= 1).map(|n| (p, n))
}

/// `α_n` = `a<n>`, `β_n` = `b<n>`, with `j({β_n}, β_n) = β_n` and
/// `j({α_1,…,α_{n+1}}, α_{n+2}) = α_{n+2}`.
#[derive(Clone, Debug, Default)]
pub struct ChainWeb;

impl WebProvider for ChainWeb {
    fn name(&self) -> String {
        "rule:chain".into()
    }

    fn contains(&self, a: &Atom) -> bool {
        matches!(split_indexed(a), Some(("a" | "b", _)))
    }

    fn apply(&self, arg: &BTreeSet<Atom>, elem: &Atom) -> Option<Atom> {
        match split_indexed(elem)? {
            ("b", n) if arg.len() == 1 && arg.contains(elem) => Some(indexed("b", n)),
            ("a", n) if n >= 2 => {
                let want: BTreeSet<Atom> = (1..n).map(|i| indexed("a", i)).collect();
                (*arg == want).then(|| elem.clone())
            }
            _ => None,
        }
    }

    fn unapply(&self, a: &Atom) -> Unapply<Atom> {
        match split_indexed(a) {
            Some(("b", _)) => Unapply::Preimage(BTreeSet::from([a.clone()]), a.clone()),
            Some(("a", n)) if n >= 2 => Unapply::Preimage((1..n).map(|i| indexed("a", i)).collect(), a.clone()),
            _ => Unapply::NoPreimage,
        }
    }

    fn atoms(&self, n: usize) -> BTreeSet<Atom> {
        (1..=n).flat_map(|i| [indexed("a", i), indexed("b", i)]).collect()
    }

    fn effectivity(&self) -> Effectivity {
        Effectivity::Effective
    }

    fn rows_over(&self, scope: &BTreeSet<Atom>) -> Vec<(Key<Atom>, Atom)> {
        scope
            .iter()
            .filter_map(|a| match self.unapply(a) {
                Unapply::Preimage(arg, x) if arg.is_subset(scope) => Some(((arg, x), a.clone())),
                _ => None,
            })
            .collect()
    }
}

/// Atoms `a<n>` (α), `b<n>` (β), `c<n>` (α′), `d<n>` (β′) with
/// `j({α′_n}, β_n) = α′_n` and `j({α_1,…,α_n}, β_n) = β′_n`.
#[derive(Clone, Debug, Default)]
pub struct TwinWeb;

impl WebProvider for TwinWeb {
    fn name(&self) -> String {
        "rule:twin".into()
    }

    fn contains(&self, a: &Atom) -> bool {
        matches!(split_indexed(a), Some(("a" | "b" | "c" | "d", _)))
    }

    fn apply(&self, arg: &BTreeSet<Atom>, elem: &Atom) -> Option<Atom> {
        let ("b", n) = split_indexed(elem)? else { return None };
        if arg.len() == 1 && arg.contains(&indexed("c", n)) {
            return Some(indexed("c", n));
        }
        let prefix: BTreeSet<Atom> = (1..=n).map(|i| indexed("a", i)).collect();
        (*arg == prefix).then(|| indexed("d", n))
    }

    fn unapply(&self, a: &Atom) -> Unapply<Atom> {
        match split_indexed(a) {
            Some(("c", n)) => Unapply::Preimage(BTreeSet::from([a.clone()]), indexed("b", n)),
            Some(("d", n)) => Unapply::Preimage((1..=n).map(|i| indexed("a", i)).collect(), indexed("b", n)),
            _ => Unapply::NoPreimage,
        }
    }

    fn atoms(&self, n: usize) -> BTreeSet<Atom> {
        (1..=n).flat_map(|i| ["a", "b", "c", "d"].map(|p| indexed(p, i))).collect()
    }

    fn effectivity(&self) -> Effectivity {
        Effectivity::Effective
    }

    fn rows_over(&self, scope: &BTreeSet<Atom>) -> Vec<(Key<Atom>, Atom)> {
        let mut out = Vec::new();
        for a in scope {
            if let Some(("b", n)) = split_indexed(a) {
                let c = indexed("c", n);
                if scope.contains(&c) {
                    out.push(((BTreeSet::from([c.clone()]), a.clone()), c));
                }
                let prefix: BTreeSet<Atom> = (1..=n).map(|i| indexed("a", i)).collect();
                if prefix.is_subset(scope) {
                    out.push(((prefix, a.clone()), indexed("d", n)));
                }
            }
        }
        out
    }
}

/// Wraps a provider and hides its range: `unapply` always answers
/// `Unsupported`, so the web is only weakly effective.
#[derive(Clone, Debug)]
pub struct Opaque(pub Arc<dyn WebProvider>);

impl WebProvider for Opaque {
    fn name(&self) -> String {
        format!("opaque:{}", self.0.name())
    }

    fn contains(&self, a: &Atom) -> bool {
        self.0.contains(a)
    }

    fn apply(&self, arg: &BTreeSet<Atom>, elem: &Atom) -> Option<Atom> {
        self.0.apply(arg, elem)
    }

    fn unapply(&self, _a: &Atom) -> Unapply<Atom> {
        Unapply::Unsupported
    }

    fn atoms(&self, n: usize) -> BTreeSet<Atom> {
        self.0.atoms(n)
    }

    fn effectivity(&self) -> Effectivity {
        Effectivity::WeaklyEffective
    }

    fn rows_over(&self, scope: &BTreeSet<Atom>) -> Vec<(Key<Atom>, Atom)> {
        self.0.rows_over(scope)
    }
}

/// A generating pair: an explicit finite table or a rule-defined provider.
#[derive(Clone, Debug)]
pub enum Web {
    Finite { name: String, pair: Arc<Pair> },
    Rule(Arc<dyn WebProvider>),
}

impl Web {
    pub fn finite(name: impl Into<String>, pair: Pair) -> Web {
        Web::Finite { name: name.into(), pair: Arc::new(pair) }
    }

    pub fn rule(provider: impl WebProvider + 'static) -> Web {
        Web::Rule(Arc::new(provider))
    }

    pub fn name(&self) -> String {
        match self {
            Web::Finite { name, .. } => name.clone(),
            Web::Rule(p) => p.name(),
        }
    }

    pub fn as_pair(&self) -> Option<&Pair> {
        match self {
            Web::Finite { pair, .. } => Some(pair),
            Web::Rule(_) => None,
        }
    }

    pub fn contains(&self, a: &Atom) -> bool {
        match self {
            Web::Finite { pair, .. } => pair.contains(a),
            Web::Rule(p) => p.contains(a),
        }
    }

    pub fn apply(&self, arg: &BTreeSet<Atom>, elem: &Atom) -> Option<Atom> {
        match self {
            Web::Finite { pair, .. } => pair.apply(arg, elem).cloned(),
            Web::Rule(p) => p.apply(arg, elem),
        }
    }

    pub fn unapply(&self, a: &Atom) -> Unapply<Atom> {
        match self {
            Web::Finite { pair, .. } => match pair.unapply(a) {
                Some((arg, x)) => Unapply::Preimage(arg.clone(), x.clone()),
                None => Unapply::NoPreimage,
            },
            Web::Rule(p) => p.unapply(a),
        }
    }

    pub fn effectivity(&self) -> Effectivity {
        match self {
            Web::Finite { .. } => Effectivity::Effective,
            Web::Rule(p) => p.effectivity(),
        }
    }

    /// Rows of `j` whose argument atoms lie in `scope`.
    pub fn rows_over(&self, scope: &BTreeSet<Atom>) -> Vec<(Key<Atom>, Atom)> {
        match self {
            Web::Finite { pair, .. } => pair
                .rows()
                .filter(|((a, x), _)| a.is_subset(scope) && scope.contains(x))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            Web::Rule(p) => p.rows_over(scope),
        }
    }

    /// Canonical description used for cache keys and report headers.
    pub fn canonical(&self) -> String {
        match self {
            Web::Finite { pair, .. } => pair.to_string(),
            Web::Rule(p) => p.name(),
        }
    }
}
