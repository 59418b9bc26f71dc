use std::collections::BTreeSet;
use std::fmt;

use super::element::WebElement;
use super::CompletionError;
use crate::web::{Atom, FinitePair, PairMorphism, Unapply, Web};

/// Caps on materialization; exceeding any of them is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_rank: usize,
    pub max_elements: usize,
    pub max_scope: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rank: 4, max_elements: 200_000, max_scope: 16 }
    }
}

/// Which part of the completion a computation may look at: elements of rank
/// at most `max_rank` built from atoms of `atom_scope`.
///
/// The scope is always closed under `j`: if `a ∪ {α}` lies in the scope and
/// `j(a, α)` is defined, its value lies in the scope too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Budget {
    atom_scope: BTreeSet<Atom>,
    max_rank: usize,
}

impl Budget {
    /// The whole carrier of a finite web, or the closure of the first `n`
    /// atoms of a rule web.
    pub fn for_web(web: &Web, atoms: Option<usize>, max_rank: usize, limits: &Limits) -> Result<Budget, CompletionError> {
        let seed = match (web, atoms) {
            (Web::Finite { pair, .. }, _) => pair.atoms().clone(),
            (Web::Rule(p), Some(n)) => p.atoms(n),
            (Web::Rule(_), None) => return Err(CompletionError::ScopeRequired(web.name())),
        };
        Budget::with_scope(web, seed, max_rank, limits)
    }

    /// Closes `scope` under `j` and validates it against the web.
    pub fn with_scope(
        web: &Web,
        scope: BTreeSet<Atom>,
        max_rank: usize,
        limits: &Limits,
    ) -> Result<Budget, CompletionError> {
        if max_rank > limits.max_rank {
            return Err(CompletionError::RankLimit { rank: max_rank, limit: limits.max_rank });
        }
        if let Some(a) = scope.iter().find(|a| !web.contains(a)) {
            return Err(CompletionError::ForeignAtom(a.to_string()));
        }
        let mut scope = scope;
        loop {
            if scope.len() > limits.max_scope {
                return Err(CompletionError::ScopeLimit { atoms: scope.len(), limit: limits.max_scope });
            }
            let missing: Vec<Atom> =
                web.rows_over(&scope).into_iter().map(|(_, v)| v).filter(|v| !scope.contains(v)).collect();
            if missing.is_empty() {
                break;
            }
            scope.extend(missing);
        }
        Ok(Budget { atom_scope: scope, max_rank })
    }

    pub fn atom_scope(&self) -> &BTreeSet<Atom> {
        &self.atom_scope
    }

    pub fn max_rank(&self) -> usize {
        self.max_rank
    }

    /// Same scope, different rank.
    pub fn with_rank(&self, max_rank: usize) -> Budget {
        Budget { atom_scope: self.atom_scope.clone(), max_rank }
    }

    /// Componentwise order.
    pub fn le(&self, other: &Budget) -> bool {
        self.max_rank <= other.max_rank && self.atom_scope.is_subset(&other.atom_scope)
    }

    /// True when the element lies in the budgeted part of the completion.
    pub fn admits(&self, e: &WebElement) -> bool {
        e.rank() <= self.max_rank && e.atoms().is_subset(&self.atom_scope)
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank:{} atoms:{}", self.max_rank, self.atom_scope.len())
    }
}

/// `i(a, α)`: the generator's value when `(a, α) ∈ dom(j)`, else a fresh pair.
pub fn i_apply(web: &Web, arg: &BTreeSet<WebElement>, elem: &WebElement) -> WebElement {
    if let Some(x) = elem.as_atom() {
        let atoms: Option<BTreeSet<Atom>> = arg.iter().map(|e| e.as_atom().cloned()).collect();
        if let Some(atoms) = atoms {
            if let Some(v) = web.apply(&atoms, x) {
                return WebElement::Atom(v);
            }
        }
    }
    WebElement::pair(arg.clone(), elem.clone())
}

/// Partial inverse of [`i_apply`].
pub fn unapply(web: &Web, e: &WebElement) -> Unapply<WebElement> {
    match e {
        WebElement::Pair(p) => Unapply::Preimage(p.arg.clone(), p.result.clone()),
        WebElement::Atom(a) => match web.unapply(a) {
            Unapply::Preimage(arg, x) => {
                Unapply::Preimage(arg.into_iter().map(WebElement::Atom).collect(), WebElement::Atom(x))
            }
            Unapply::NoPreimage => Unapply::NoPreimage,
            Unapply::Unsupported => Unapply::Unsupported,
        },
    }
}

fn check_rank(b: &Budget, limits: &Limits) -> Result<(), CompletionError> {
    if b.max_rank > limits.max_rank {
        return Err(CompletionError::RankLimit { rank: b.max_rank, limit: limits.max_rank });
    }
    if b.atom_scope.len() > limits.max_scope {
        return Err(CompletionError::ScopeLimit { atoms: b.atom_scope.len(), limit: limits.max_scope });
    }
    Ok(())
}

/// Fresh pairs over `level`, in canonical order.
fn fresh_over(web: &Web, level: &[WebElement], limits: &Limits) -> Result<Vec<WebElement>, CompletionError> {
    let n = level.len();
    let too_many = n >= 40 || (n as u128) << n > limits.max_elements as u128;
    if too_many {
        return Err(CompletionError::ElementLimit { limit: limits.max_elements });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let arg: BTreeSet<WebElement> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| level[i].clone()).collect();
        for x in level {
            let v = i_apply(web, &arg, x);
            if matches!(v, WebElement::Pair(_)) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Cumulative strata `E_0 ⊆ E_1 ⊆ … ⊆ E_k`, each sorted.
pub fn strata(web: &Web, b: &Budget, limits: &Limits) -> Result<Vec<Vec<WebElement>>, CompletionError> {
    check_rank(b, limits)?;
    let base: Vec<WebElement> = b.atom_scope.iter().cloned().map(WebElement::Atom).collect();
    let mut levels = vec![base.clone()];
    for _ in 0..b.max_rank {
        let prev = levels.last().expect("non-empty");
        let mut next = base.clone();
        next.extend(fresh_over(web, prev, limits)?);
        next.sort();
        if next.len() > limits.max_elements {
            return Err(CompletionError::ElementLimit { limit: limits.max_elements });
        }
        levels.push(next);
    }
    Ok(levels)
}

/// All completion elements of rank at most `b.max_rank` over `b.atom_scope`.
pub fn elements_up_to(web: &Web, b: &Budget, limits: &Limits) -> Result<Vec<WebElement>, CompletionError> {
    Ok(strata(web, b, limits)?.pop().expect("non-empty"))
}

/// The finite subpair of the completion carried by `elements_up_to(web, b)`.
pub fn restricted_pair(web: &Web, b: &Budget, limits: &Limits) -> Result<FinitePair<WebElement>, CompletionError> {
    let levels = strata(web, b, limits)?;
    let carrier = levels.last().expect("non-empty").clone();
    let mut rows = Vec::new();
    for ((arg, x), v) in web.rows_over(&b.atom_scope) {
        let arg = arg.into_iter().map(WebElement::Atom).collect();
        rows.push(((arg, WebElement::Atom(x)), WebElement::Atom(v)));
    }
    if b.max_rank > 0 {
        for e in &carrier {
            if let Some((arg, x)) = e.as_pair() {
                rows.push(((arg.clone(), x.clone()), e.clone()));
            }
        }
    }
    Ok(FinitePair::new(carrier, rows)?)
}

/// The unique extension of `theta` to completions, evaluated at `e`.
pub fn extend_morphism(
    theta: &PairMorphism<Atom>,
    target: &Web,
    e: &WebElement,
) -> Result<WebElement, CompletionError> {
    match e {
        WebElement::Atom(a) => match theta.apply(a) {
            Some(b) => Ok(WebElement::Atom(b.clone())),
            None => Err(CompletionError::MorphismDomain(a.to_string())),
        },
        WebElement::Pair(p) => {
            let arg = p
                .arg
                .iter()
                .map(|x| extend_morphism(theta, target, x))
                .collect::<Result<BTreeSet<_>, _>>()?;
            let x = extend_morphism(theta, target, &p.result)?;
            Ok(i_apply(target, &arg, &x))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::parse_element;
    use crate::web::{family, FamilyKind};

    fn web(kind: FamilyKind, n: usize) -> Web {
        Web::finite(format!("{kind}"), family(kind, &[n]).unwrap())
    }

    fn els(xs: &[WebElement]) -> Vec<String> {
        xs.iter().map(|e| e.to_string()).collect()
    }

    fn budget(w: &Web, k: usize) -> Budget {
        Budget::for_web(w, None, k, &Limits::default()).unwrap()
    }

    #[test]
    fn i_apply_examples() {
        let a = WebElement::Atom(Atom::named("a"));
        let empty = BTreeSet::new();
        assert_eq!(i_apply(&web(FamilyKind::Scott, 1), &empty, &a), a);
        assert_eq!(i_apply(&web(FamilyKind::Engeler, 1), &empty, &a).to_string(), "({},a)");
        assert_eq!(i_apply(&web(FamilyKind::Park, 1), &BTreeSet::from([a.clone()]), &a), a);
    }

    #[test]
    fn unapply_examples() {
        let a = WebElement::Atom(Atom::named("a"));
        assert_eq!(unapply(&web(FamilyKind::Engeler, 1), &a), Unapply::NoPreimage);
        assert_eq!(unapply(&web(FamilyKind::Park, 1), &a), Unapply::Preimage(BTreeSet::from([a.clone()]), a.clone()));
        let p = parse_element("({a},({},a))").unwrap();
        let (x, y) = p.as_pair().unwrap();
        assert_eq!(unapply(&web(FamilyKind::Scott, 1), &p), Unapply::Preimage(x.clone(), y.clone()));
    }

    #[test]
    fn strata_examples() {
        let l = Limits::default();
        let e = web(FamilyKind::Engeler, 1);
        assert_eq!(els(&elements_up_to(&e, &budget(&e, 1), &l).unwrap()), ["a", "({},a)", "({a},a)"]);
        let p = web(FamilyKind::Park, 1);
        assert_eq!(els(&elements_up_to(&p, &budget(&p, 1), &l).unwrap()), ["a", "({},a)"]);
        assert_eq!(els(&elements_up_to(&p, &budget(&p, 0), &l).unwrap()), ["a"]);
    }

    #[test]
    fn stratum_sizes() {
        let l = Limits::default();
        let sizes = |w: &Web, k| elements_up_to(w, &budget(w, k), &l).unwrap().len();
        let e = web(FamilyKind::Engeler, 1);
        assert_eq!([sizes(&e, 0), sizes(&e, 1), sizes(&e, 2)], [1, 3, 25]);
        let s = web(FamilyKind::Scott, 1);
        assert_eq!([sizes(&s, 1), sizes(&s, 2), sizes(&s, 3)], [2, 8, 2048]);
        assert!(matches!(
            elements_up_to(&e, &budget(&e, 3), &l),
            Err(CompletionError::ElementLimit { .. })
        ));
    }

    #[test]
    fn restricted_pair_examples() {
        let l = Limits::default();
        let e = web(FamilyKind::Engeler, 1);
        let r = restricted_pair(&e, &budget(&e, 1), &l).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.table_len(), 2);
        for (k, v) in r.rows() {
            assert_eq!(WebElement::pair(k.0.clone(), k.1.clone()), *v);
        }
        let p = web(FamilyKind::Park, 1);
        let r0 = restricted_pair(&p, &budget(&p, 0), &l).unwrap();
        assert_eq!(r0.to_string(), "atoms: a\nrow: {a} a -> a");
        let r0e = restricted_pair(&e, &budget(&e, 0), &l).unwrap();
        assert_eq!(r0e.table_len(), 0);
    }

    #[test]
    fn extension_collapses_into_target_rows() {
        let e = web(FamilyKind::Engeler, 1);
        let s = web(FamilyKind::Scott, 1);
        let incl = PairMorphism::identity(e.as_pair().unwrap().atoms());
        let x = parse_element("({},a)").unwrap();
        assert_eq!(extend_morphism(&incl, &s, &x).unwrap(), parse_element("a").unwrap());
        let id = PairMorphism::identity(e.as_pair().unwrap().atoms());
        let y = parse_element("({a,({},a)},a)").unwrap();
        assert_eq!(extend_morphism(&id, &e, &y).unwrap(), y);
        let missing = PairMorphism::new(Default::default());
        assert!(extend_morphism(&missing, &e, &y).is_err());
    }

    #[test]
    fn rule_webs_need_a_scope() {
        let w = Web::rule(crate::web::TwinWeb);
        assert!(matches!(Budget::for_web(&w, None, 1, &Limits::default()), Err(CompletionError::ScopeRequired(_))));
        let b = Budget::for_web(&w, Some(1), 1, &Limits::default()).unwrap();
        assert_eq!(b.atom_scope().len(), 4);
        let seed = BTreeSet::from([Atom::named("a1"), Atom::named("b1")]);
        let closed = Budget::with_scope(&w, seed, 1, &Limits::default()).unwrap();
        assert!(closed.atom_scope().contains(&Atom::named("d1")));
    }
}
