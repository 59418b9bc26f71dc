//! Partial pairs: explicit finite tables and rule-defined providers,
//! morphisms, automorphism orbits, gluing and retractions.

mod atom;
mod error;
mod family;
mod file;
mod glue;
mod morphism;
mod pair;
mod provider;

pub use atom::{atom_name, Atom, AtomId};
pub use error::WebError;
pub use family::{family, FamilyKind};
pub use file::parse_web_file;
pub use glue::{component, component_tags, glue, is_critical, is_good, is_isolated, retraction_maps};
pub use morphism::{automorphisms, check_morphism, iso_finite_pairs, orbits, IsoResult, PairMorphism, SEARCH_LIMIT};
pub use pair::{FinitePair, Key, Pair};
pub use provider::{ChainWeb, Effectivity, Opaque, TwinWeb, Unapply, Web, WebProvider};

pub(crate) use pair::fmt_set;
