use std::fmt;

use num_bigint::BigUint;

/// Local identity of an atom inside its component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomId {
    Num(BigUint),
    Name(String),
    /// an already-tagged atom re-tagged by a further gluing
    Nested(Box<Atom>),
}

/// An element of the carrier of a generating pair.
///
/// Atoms are ordered by component tag first, then by local id. Tag 0 is used
/// for atoms that have never been glued.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub tag: u32,
    pub id: AtomId,
}

impl Atom {
    pub fn named(name: &str) -> Atom {
        Atom { tag: 0, id: AtomId::Name(name.to_string()) }
    }

    pub fn num(n: impl Into<BigUint>) -> Atom {
        Atom { tag: 0, id: AtomId::Num(n.into()) }
    }

    /// Parses the display form of an untagged atom: digits give a numeric id,
    /// anything else a name.
    pub fn parse(text: &str) -> Atom {
        if !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit()) {
            Atom::num(text.parse::<BigUint>().expect("digits"))
        } else {
            Atom::named(text)
        }
    }

    /// Moves the atom into component `tag`, nesting any previous tag.
    pub fn retag(&self, tag: u32) -> Atom {
        if self.tag == 0 {
            Atom { tag, id: self.id.clone() }
        } else {
            Atom { tag, id: AtomId::Nested(Box::new(self.clone())) }
        }
    }

    pub fn as_num(&self) -> Option<&BigUint> {
        match &self.id {
            AtomId::Num(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomId::Num(n) => write!(f, "{n}"),
            AtomId::Name(s) => f.write_str(s),
            AtomId::Nested(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag == 0 {
            write!(f, "{}", self.id)
        } else {
            write!(f, "{}#{}", self.id, self.tag)
        }
    }
}

/// Name of the `i`-th atom of a family pair: `a`..`z`, then `a26`, `a27`, ...
pub fn atom_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("a{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_tag_then_id() {
        let a1 = Atom::named("z").retag(1);
        let b2 = Atom::named("a").retag(2);
        assert!(a1 < b2);
        assert!(Atom::named("a") < Atom::named("b"));
        assert!(Atom::named("z") < a1);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Atom::named("a").to_string(), "a");
        assert_eq!(Atom::named("a").retag(2).to_string(), "a#2");
        assert_eq!(Atom::named("a").retag(1).retag(3).to_string(), "a#1#3");
        assert_eq!(Atom::parse("12"), Atom::num(12u32));
        assert_eq!(Atom::parse("b"), Atom::named("b"));
    }

    #[test]
    fn family_names() {
        assert_eq!(atom_name(0), "a");
        assert_eq!(atom_name(25), "z");
        assert_eq!(atom_name(26), "a26");
    }
}
