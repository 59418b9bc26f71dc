use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::CompletionError;
use crate::web::Atom;

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PairNode {
    rank: usize,
    pub arg: BTreeSet<WebElement>,
    pub result: WebElement,
}

/// An element of the free completion: an atom of the generator, or a fresh
/// pair `(a, α)` adjoined because `(a, α) ∉ dom(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WebElement {
    Atom(Atom),
    Pair(Arc<PairNode>),
}

impl WebElement {
    /// Builds a fresh pair; whether it is really fresh is the caller's
    /// business (see `i_apply`).
    pub fn pair(arg: BTreeSet<WebElement>, result: WebElement) -> WebElement {
        let rank = 1 + arg.iter().map(|e| e.rank()).max().unwrap_or(0).max(result.rank());
        WebElement::Pair(Arc::new(PairNode { rank, arg, result }))
    }

    pub fn atom(a: Atom) -> WebElement {
        WebElement::Atom(a)
    }

    pub fn rank(&self) -> usize {
        match self {
            WebElement::Atom(_) => 0,
            WebElement::Pair(p) => p.rank,
        }
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            WebElement::Atom(a) => Some(a),
            WebElement::Pair(_) => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&BTreeSet<WebElement>, &WebElement)> {
        match self {
            WebElement::Atom(_) => None,
            WebElement::Pair(p) => Some((&p.arg, &p.result)),
        }
    }

    /// Atoms occurring anywhere in the element.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            WebElement::Atom(a) => {
                out.insert(a.clone());
            }
            WebElement::Pair(p) => {
                for e in &p.arg {
                    e.collect_atoms(out);
                }
                p.result.collect_atoms(out);
            }
        }
    }
}

/// Rank first, then atoms before pairs, then structure.
impl Ord for WebElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
            (WebElement::Atom(a), WebElement::Atom(b)) => a.cmp(b),
            (WebElement::Atom(_), WebElement::Pair(_)) => Ordering::Less,
            (WebElement::Pair(_), WebElement::Atom(_)) => Ordering::Greater,
            (WebElement::Pair(p), WebElement::Pair(q)) => {
                if Arc::ptr_eq(p, q) {
                    Ordering::Equal
                } else {
                    p.arg.iter().cmp(q.arg.iter()).then_with(|| p.result.cmp(&q.result))
                }
            }
        })
    }
}

impl PartialOrd for WebElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WebElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WebElement::Atom(a) => write!(f, "{a}"),
            WebElement::Pair(p) => {
                f.write_str("({")?;
                for (i, e) in p.arg.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "}},{})", p.result)
            }
        }
    }
}

struct ElementParser<'a> {
    chars: Vec<char>,
    at: usize,
    text: &'a str,
}

impl ElementParser<'_> {
    fn fail<T>(&self, msg: &str) -> Result<T, CompletionError> {
        Err(CompletionError::ElementSyntax { text: self.text.to_string(), pos: self.at + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.at < self.chars.len() && self.chars[self.at].is_whitespace() {
            self.at += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.chars.get(self.at) == Some(&c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> String {
        let start = self.at;
        while self.at < self.chars.len() && (self.chars[self.at].is_ascii_alphanumeric() || "_'".contains(self.chars[self.at])) {
            self.at += 1;
        }
        self.chars[start..self.at].iter().collect()
    }

    fn element(&mut self) -> Result<WebElement, CompletionError> {
        self.skip_ws();
        if self.eat('(') {
            if !self.eat('{') {
                return self.fail("expected `{`");
            }
            let mut arg = BTreeSet::new();
            if !self.eat('}') {
                loop {
                    arg.insert(self.element()?);
                    if self.eat('}') {
                        break;
                    }
                    if !self.eat(',') {
                        return self.fail("expected `,` or `}`");
                    }
                }
            }
            if !self.eat(',') {
                return self.fail("expected `,`");
            }
            let result = self.element()?;
            if !self.eat(')') {
                return self.fail("expected `)`");
            }
            return Ok(WebElement::pair(arg, result));
        }
        let name = self.word();
        if name.is_empty() {
            return self.fail("expected an atom or a pair");
        }
        let mut atom = Atom::parse(&name);
        while self.chars.get(self.at) == Some(&'#') {
            self.at += 1;
            let tag = self.word();
            match tag.parse::<u32>() {
                Ok(t) if t > 0 => atom = atom.retag(t),
                _ => return self.fail("expected a positive component tag"),
            }
        }
        Ok(WebElement::Atom(atom))
    }
}

/// Parses the canonical element syntax, e.g. `({a,b#2},c)`.
pub fn parse_element(text: &str) -> Result<WebElement, CompletionError> {
    let mut p = ElementParser { chars: text.chars().collect(), at: 0, text };
    let e = p.element()?;
    p.skip_ws();
    if p.at != p.chars.len() {
        return p.fail("trailing input");
    }
    Ok(e)
}
