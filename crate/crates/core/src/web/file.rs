//! Plain-text web descriptions.
//!
//! ```text
//! # comment
//! atoms: a b c
//! row: {a b} c -> a
//! family: park 2
//! ```

use std::collections::{BTreeMap, BTreeSet};

use super::atom::Atom;
use super::error::WebError;
use super::family::{family, FamilyKind};
use super::pair::{fmt_row, Key, Pair};

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, WebError> {
    Err(WebError::File { line, msg: msg.into() })
}

fn parse_atom(tok: &str, line: usize) -> Result<Atom, WebError> {
    if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
        return err(line, format!("bad atom name `{tok}`"));
    }
    Ok(Atom::parse(tok))
}

fn parse_row(text: &str, line: usize) -> Result<(Key<Atom>, Atom), WebError> {
    let text = text.trim();
    let Some(rest) = text.strip_prefix('{') else { return err(line, "row must start with `{`") };
    let Some(close) = rest.find('}') else { return err(line, "missing `}`") };
    let arg = rest[..close]
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_atom(t, line))
        .collect::<Result<BTreeSet<Atom>, _>>()?;
    let Some((elem, value)) = rest[close + 1..].split_once("->") else { return err(line, "missing `->`") };
    let elem = parse_atom(elem.trim(), line)?;
    let value = parse_atom(value.trim(), line)?;
    Ok(((arg, elem), value))
}

/// Parses a web description into a finite pair.
pub fn parse_web_file(text: &str) -> Result<Pair, WebError> {
    let mut atoms: BTreeSet<Atom> = BTreeSet::new();
    let mut rows: BTreeMap<Key<Atom>, (Atom, usize)> = BTreeMap::new();
    let mut values: BTreeMap<Atom, (Key<Atom>, usize)> = BTreeMap::new();
    let mut fam: Option<Pair> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let Some((kw, rest)) = body.split_once(':') else { return err(line, "expected `keyword: ...`") };
        match kw.trim() {
            "atoms" => {
                for tok in rest.split_whitespace() {
                    atoms.insert(parse_atom(tok, line)?);
                }
            }
            "row" => {
                let (key, value) = parse_row(rest, line)?;
                for a in key.0.iter().chain([&key.1, &value]) {
                    if !atoms.contains(a) {
                        return err(line, format!("atom {a} is not declared"));
                    }
                }
                if let Some((old, at)) = rows.get(&key) {
                    let what = if *old == value { "duplicate row" } else { "conflicting row" };
                    return err(line, format!("{what} {} (first given on line {at})", fmt_row(&key, &value)));
                }
                if let Some((other, at)) = values.get(&value) {
                    return err(
                        line,
                        format!(
                            "injectivity violation: {} and {} (line {at}) share a value",
                            fmt_row(&key, &value),
                            fmt_row(other, &value)
                        ),
                    );
                }
                values.insert(value.clone(), (key.clone(), line));
                rows.insert(key, (value, line));
            }
            "family" => {
                let mut toks = rest.split_whitespace();
                let Some(kind) = toks.next() else { return err(line, "missing family kind") };
                let kind: FamilyKind = kind.parse().map_err(|e: WebError| WebError::File { line, msg: e.to_string() })?;
                let sizes = toks
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| WebError::File { line, msg: e.to_string() })?;
                if fam.is_some() {
                    return err(line, "only one family statement is allowed");
                }
                fam = Some(family(kind, &sizes).map_err(|e| WebError::File { line, msg: e.to_string() })?);
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
    }
    let explicit = Pair::new(atoms, rows.into_iter().map(|(k, (v, _))| (k, v)))?;
    match fam {
        None => Ok(explicit),
        Some(f) if explicit.is_empty() => Ok(f),
        Some(f) => f.union(&explicit).map_err(|e| WebError::File { line: 0, msg: e.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_rows() {
        let p = parse_web_file("atoms: a b\nrow: {a} a -> a\n# note\nrow: {} b -> b\n").unwrap();
        assert_eq!(p.to_string(), "atoms: a b\nrow: {} b -> b\nrow: {a} a -> a");
    }

    #[test]
    fn family_statement() {
        let p = parse_web_file("family: park 2").unwrap();
        assert_eq!(p, family(FamilyKind::Park, &[2]).unwrap());
    }

    #[test]
    fn canonical_text_round_trips() {
        let p = family(FamilyKind::Mixed, &[1, 2]).unwrap();
        assert_eq!(parse_web_file(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = parse_web_file("atoms: a\nrow: {a} a -> a\nrow: {a} a -> a");
        assert!(matches!(dup, Err(WebError::File { line: 3, ref msg }) if msg.contains("duplicate")));
        let inj = parse_web_file("atoms: a\nrow: {a} a -> a\nrow: {} a -> a");
        assert!(matches!(inj, Err(WebError::File { line: 3, ref msg }) if msg.contains("injectivity")));
        let undeclared = parse_web_file("atoms: a\nrow: {b} a -> a");
        assert!(matches!(undeclared, Err(WebError::File { line: 2, .. })));
        assert!(matches!(parse_web_file("atom a"), Err(WebError::File { line: 1, .. })));
    }
}
