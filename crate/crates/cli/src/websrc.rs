//! Web specifications on the command line and environment syntax.

use std::collections::BTreeSet;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use lamweb::completion::{parse_element, WebElement};
use lamweb::interp::Env;
use lamweb::theory::min_model_prefix;
use lamweb::web::{family, parse_web_file, ChainWeb, FamilyKind, Opaque, TwinWeb, Web, WebProvider};

/// A web together with the atom count that scopes it when it is infinite.
pub struct WebSpec {
    pub web: Web,
    pub scope: Option<usize>,
}

fn rule(kind: &str) -> Result<Arc<dyn WebProvider>> {
    Ok(match kind {
        "chain" => Arc::new(ChainWeb),
        "twin" => Arc::new(TwinWeb),
        other => bail!("unknown rule web `{other}` (expected chain or twin)"),
    })
}

fn number(text: &str, what: &str) -> Result<usize> {
    text.parse().with_context(|| format!("bad {what} `{text}`"))
}

/// `family:<kind>:<n>[:<m>]`, `minmodel:<m>`, `rule:<chain|twin>:<n>`,
/// `opaque:<chain|twin>:<n>`, or a path to a web file.
pub fn parse_web_spec(spec: &str) -> Result<WebSpec> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["family", kind, sizes @ ..] => {
            let kind: FamilyKind = kind.parse()?;
            let sizes = sizes.iter().map(|s| number(s, "size")).collect::<Result<Vec<_>>>()?;
            let pair = family(kind, &sizes)?;
            Ok(WebSpec { web: Web::finite(spec, pair), scope: None })
        }
        ["minmodel", m] => {
            let web = min_model_prefix(number(m, "prefix length")?)?;
            Ok(WebSpec { web, scope: None })
        }
        ["rule", kind, n] => Ok(WebSpec { web: Web::Rule(rule(kind)?), scope: Some(number(n, "atom count")?) }),
        ["opaque", kind, n] => {
            let inner = rule(kind)?;
            Ok(WebSpec { web: Web::Rule(Arc::new(Opaque(inner))), scope: Some(number(n, "atom count")?) })
        }
        _ => {
            let text = std::fs::read_to_string(spec).with_context(|| format!("cannot read web file `{spec}`"))?;
            let pair = parse_web_file(&text).with_context(|| format!("in web file `{spec}`"))?;
            Ok(WebSpec { web: Web::finite(spec, pair), scope: None })
        }
    }
}

/// Splits at `sep` outside braces and parentheses.
fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// `x={a,({a},a)};y={}`; empty text is the empty environment.
pub fn parse_env(text: &str) -> Result<Env<WebElement>> {
    let mut env = Env::empty();
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(env);
    }
    for binding in split_top(text, ';') {
        let (name, value) = binding.split_once('=').ok_or_else(|| anyhow!("binding `{binding}` lacks `=`"))?;
        let value = value.trim();
        let inner = value
            .strip_prefix('{')
            .and_then(|v| v.strip_suffix('}'))
            .ok_or_else(|| anyhow!("value of `{name}` must be a set in braces"))?;
        let mut set = BTreeSet::new();
        if !inner.trim().is_empty() {
            for item in split_top(inner, ',') {
                set.insert(parse_element(item.trim())?);
            }
        }
        env = env.with(name.trim(), set);
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_web_spec("family:park:1").unwrap().web.name(), "family:park:1");
        assert!(parse_web_spec("family:mixed:2:2").is_ok());
        assert_eq!(parse_web_spec("rule:chain:3").unwrap().scope, Some(3));
        assert!(parse_web_spec("rule:nope:3").is_err());
        assert!(parse_web_spec("/nonexistent/web.txt").is_err());
    }

    #[test]
    fn environments() {
        let env = parse_env("x={a,({a},a)};y={}").unwrap();
        assert_eq!(env.get("x").unwrap().len(), 2);
        assert_eq!(env.get("y"), None);
        assert!(parse_env("x=a").is_err());
        assert_eq!(parse_env("").unwrap(), Env::empty());
    }
}
