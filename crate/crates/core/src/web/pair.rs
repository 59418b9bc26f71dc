use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::atom::Atom;
use super::error::WebError;

/// Argument of the partial injection: a finite set and an element.
pub type Key<A> = (BTreeSet<A>, A);

/// A finite partial pair `(A, j)` with `j : A* × A ⇀ A` injective.
///
/// Atoms and rows are kept sorted, so two pairs are equal exactly when their
/// canonical forms coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePair<A: Ord> {
    atoms: BTreeSet<A>,
    table: BTreeMap<Key<A>, A>,
    inverse: BTreeMap<A, Key<A>>,
}

/// Generating pairs have [`Atom`] carriers.
pub type Pair = FinitePair<Atom>;

pub(crate) fn fmt_set<A: fmt::Display>(set: &BTreeSet<A>, sep: &str) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(sep))
}

pub(crate) fn fmt_row<A: fmt::Display>(key: &Key<A>, value: &A) -> String {
    format!("{} {} -> {}", fmt_set(&key.0, " "), key.1, value)
}

impl<A: Ord + Clone + fmt::Display> FinitePair<A> {
    /// Validates a carrier and a table.
    pub fn new(
        atoms: impl IntoIterator<Item = A>,
        rows: impl IntoIterator<Item = (Key<A>, A)>,
    ) -> Result<Self, WebError> {
        let atoms: BTreeSet<A> = atoms.into_iter().collect();
        let mut table = BTreeMap::new();
        let mut inverse: BTreeMap<A, Key<A>> = BTreeMap::new();
        for (key, value) in rows {
            for x in key.0.iter().chain([&key.1, &value]) {
                if !atoms.contains(x) {
                    return Err(WebError::ForeignAtom(x.to_string()));
                }
            }
            if let Some(old) = table.get(&key) {
                if *old == value {
                    return Err(WebError::DuplicateRow(fmt_row(&key, &value)));
                }
                return Err(WebError::Injectivity {
                    first: fmt_row(&key, old),
                    second: fmt_row(&key, &value),
                    value: "two values".into(),
                });
            }
            if let Some(other) = inverse.get(&value) {
                return Err(WebError::Injectivity {
                    first: fmt_row(other, &value),
                    second: fmt_row(&key, &value),
                    value: value.to_string(),
                });
            }
            inverse.insert(value.clone(), key.clone());
            table.insert(key, value);
        }
        Ok(FinitePair { atoms, table, inverse })
    }

    pub fn atoms(&self) -> &BTreeSet<A> {
        &self.atoms
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Key<A>, &A)> {
        self.table.iter()
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, a: &A) -> bool {
        self.atoms.contains(a)
    }

    pub fn apply(&self, arg: &BTreeSet<A>, elem: &A) -> Option<&A> {
        // avoid cloning the key for the lookup when the table is empty
        if self.table.is_empty() {
            return None;
        }
        self.table.get(&(arg.clone(), elem.clone()))
    }

    pub fn apply_key(&self, key: &Key<A>) -> Option<&A> {
        self.table.get(key)
    }

    /// The preimage of `value` under `j`, if any.
    pub fn unapply(&self, value: &A) -> Option<&Key<A>> {
        self.inverse.get(value)
    }

    /// `self ⊑ other`: carrier inclusion and agreement on `dom(j_self)`.
    pub fn is_subpair(&self, other: &FinitePair<A>) -> bool {
        self.atoms.is_subset(&other.atoms) && self.table.iter().all(|(k, v)| other.table.get(k) == Some(v))
    }

    /// The subpair on `keep`: rows whose atoms all lie in `keep`.
    pub fn restrict(&self, keep: &BTreeSet<A>) -> FinitePair<A> {
        let atoms: BTreeSet<A> = self.atoms.intersection(keep).cloned().collect();
        let rows = self
            .table
            .iter()
            .filter(|((a, x), v)| a.is_subset(&atoms) && atoms.contains(x) && atoms.contains(v))
            .map(|(k, v)| (k.clone(), v.clone()));
        FinitePair::new(atoms.clone(), rows).expect("restriction of a valid pair")
    }

    /// Union of two pairs that agree on their common domain.
    pub fn union(&self, other: &FinitePair<A>) -> Result<FinitePair<A>, WebError> {
        let atoms = self.atoms.union(&other.atoms).cloned();
        let mut rows: BTreeMap<Key<A>, A> = self.table.clone();
        for (k, v) in &other.table {
            match rows.get(k) {
                Some(old) if old != v => {
                    return Err(WebError::Injectivity {
                        first: fmt_row(k, old),
                        second: fmt_row(k, v),
                        value: "two values".into(),
                    })
                }
                _ => {
                    rows.insert(k.clone(), v.clone());
                }
            }
        }
        FinitePair::new(atoms, rows)
    }

    /// Applies `f` to every atom; `f` must be injective.
    pub fn map_atoms<B: Ord + Clone + fmt::Display>(&self, f: impl Fn(&A) -> B) -> FinitePair<B> {
        let atoms: Vec<B> = self.atoms.iter().map(&f).collect();
        let rows = self
            .table
            .iter()
            .map(|((a, x), v)| ((a.iter().map(&f).collect(), f(x)), f(v)));
        FinitePair::new(atoms, rows).expect("injective relabelling preserves validity")
    }
}

/// Canonical text form, also accepted by the web file parser when atom names
/// are plain identifiers or numbers.
impl<A: Ord + Clone + fmt::Display> fmt::Display for FinitePair<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        write!(f, "atoms: {}", atoms.join(" "))?;
        for (k, v) in &self.table {
            write!(f, "\nrow: {}", fmt_row(k, v))?;
        }
        Ok(())
    }
}
