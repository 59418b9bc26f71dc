use super::parse::ParseError;
use super::term::Term;

/// Names accepted by [`builtin`], in table order.
pub const BUILTIN_NAMES: [&str; 9] = ["I", "T", "F", "S", "One", "Delta", "Omega", "Omega3", "Bot"];

fn v(i: usize) -> Term {
    Term::Var(i)
}

fn delta() -> Term {
    Term::lam(Term::app(v(0), v(0)))
}

fn delta3() -> Term {
    Term::lam(Term::apps(v(0), [v(0), v(0)]))
}

/// The standard combinators.
pub fn builtin(name: &str) -> Result<Term, ParseError> {
    let t = match name {
        "I" => Term::lam(v(0)),
        "T" => Term::lams(2, v(1)),
        "F" => Term::lams(2, v(0)),
        // λxyz.xz(yz)
        "S" => Term::lams(3, Term::apps(v(2), [v(0), Term::app(v(1), v(0))])),
        // λxy.xy
        "One" => Term::lams(2, Term::app(v(1), v(0))),
        "Delta" => delta(),
        "Omega" => Term::app(delta(), delta()),
        "Omega3" => Term::app(delta3(), delta3()),
        "Bot" => Term::Bottom,
        other => return Err(ParseError::UnknownBuiltin(other.to_string())),
    };
    Ok(t)
}
