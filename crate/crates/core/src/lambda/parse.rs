use thiserror::Error;

use super::builtin::builtin;
use super::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable `{name}` at column {pos}")]
    Unbound { name: String, pos: usize },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Lambda,
    Dot,
    LParen,
    RParen,
    Ident(String),
    Bottom,
    Builtin(String),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '\\' | 'λ' => {
                out.push((pos, Tok::Lambda));
                i += 1;
            }
            '.' => {
                out.push((pos, Tok::Dot));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            '_' if chars[i..].starts_with(&['_', '|', '_']) => {
                out.push((pos, Tok::Bottom));
                i += 3;
            }
            '!' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                if j == start {
                    return Err(ParseError::Syntax { pos, msg: "expected builtin name after `!`".into() });
                }
                out.push((pos, Tok::Builtin(chars[start..j].iter().collect())));
                i = j;
            }
            c if c.is_ascii_lowercase() => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push((pos, Tok::Ident(chars[i..j].iter().collect())));
                i = j;
            }
            other => {
                return Err(ParseError::Syntax { pos, msg: format!("unexpected character `{other}`") });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    scope: Vec<String>,
    closed: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Tok::Lambda) {
            self.at += 1;
            let mut names = Vec::new();
            while let Some(Tok::Ident(n)) = self.peek() {
                names.push(n.clone());
                self.at += 1;
            }
            if names.is_empty() {
                return self.err("expected at least one binder");
            }
            if self.peek() != Some(&Tok::Dot) {
                return self.err("expected `.`");
            }
            self.at += 1;
            let depth = self.scope.len();
            self.scope.extend(names.iter().cloned());
            let body = self.term();
            self.scope.truncate(depth);
            return Ok(Term::lams(names.len(), body?));
        }
        let mut acc = match self.atom()? {
            Some(t) => t,
            None => return self.err("expected a term"),
        };
        while let Some(arg) = self.atom()? {
            acc = Term::app(acc, arg);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Option<Term>, ParseError> {
        let pos = self.pos();
        let t = match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match self.scope.iter().rev().position(|n| *n == name) {
                    Some(idx) => Term::Var(idx),
                    None if self.closed => return Err(ParseError::Unbound { name, pos }),
                    None => Term::Free(name),
                }
            }
            Some(Tok::Bottom) => {
                self.at += 1;
                Term::Bottom
            }
            Some(Tok::Builtin(name)) => {
                self.at += 1;
                builtin(&name)?
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.term()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                inner
            }
            _ => return Ok(None),
        };
        Ok(Some(t))
    }
}

fn parse_with(text: &str, closed: bool) -> Result<Term, ParseError> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, at: 0, end, scope: Vec::new(), closed };
    let t = p.term()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(t)
}

/// Parses surface syntax; unbound identifiers become free variables.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_with(text, false)
}

/// Parses surface syntax, rejecting unbound identifiers.
pub fn parse_closed(text: &str) -> Result<Term, ParseError> {
    parse_with(text, true)
}
