use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::web::fmt_set;

/// An environment: free variable name to a finite set; unlisted names denote
/// the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Env<A: Ord> {
    map: BTreeMap<String, BTreeSet<A>>,
}

impl<A: Ord> Default for Env<A> {
    fn default() -> Self {
        Env { map: BTreeMap::new() }
    }
}

impl<A: Ord + Clone + fmt::Display> Env<A> {
    pub fn empty() -> Self {
        Env::default()
    }

    pub fn get(&self, name: &str) -> Option<&BTreeSet<A>> {
        self.map.get(name)
    }

    /// `ρ[x := a]`, leaving `self` untouched.
    pub fn with(&self, name: &str, value: BTreeSet<A>) -> Self {
        let mut map = self.map.clone();
        if value.is_empty() {
            map.remove(name);
        } else {
            map.insert(name.to_string(), value);
        }
        Env { map }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BTreeSet<A>)> {
        self.map.iter()
    }

    /// All elements mentioned by the environment.
    pub fn elements(&self) -> BTreeSet<A> {
        self.map.values().flatten().cloned().collect()
    }

    /// `ρ ∩ B`
    pub fn restrict(&self, keep: &BTreeSet<A>) -> Self {
        let map = self
            .map
            .iter()
            .map(|(k, v)| (k.clone(), v.intersection(keep).cloned().collect::<BTreeSet<A>>()))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        Env { map }
    }

    pub fn map_values<B: Ord>(&self, f: impl Fn(&A) -> B) -> Env<B> {
        Env { map: self.map.iter().map(|(k, v)| (k.clone(), v.iter().map(&f).collect())).collect() }
    }
}

/// Sorted support with sorted values, e.g. `x={a},y={}`; `-` when empty.
impl<A: Ord + Clone + fmt::Display> fmt::Display for Env<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.map.iter().map(|(k, v)| format!("{k}={}", fmt_set(v, ","))).collect();
        f.write_str(&parts.join(";"))
    }
}
