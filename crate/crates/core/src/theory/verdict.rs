use std::fmt;

use super::TheoryError;
use crate::completion::{Budget, CompletionError, Limits, WebElement};
use crate::interp::{
    decide_member_normal, extract_witness_subpair, interp_slice, members_at, Env, InterpError,
};
use crate::lambda::{normalize, Normalized, Term};
use crate::web::{Effectivity, FinitePair, Web};

/// Outcome of comparing `|M| ⊑ |N|` in the model generated by a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// every left element met within the budget was found on the right
    SupportedUpTo(Budget),
    /// `witness ∈ |M|` inside the finite `subpair`, and `witness ∉ |N|` decided exactly
    CertifiedRefuted { witness: WebElement, subpair: FinitePair<WebElement>, budget: Budget },
    /// `witness ∈ |M|` but not found in `|N|` up to `budget`
    CandidateRefuted { witness: WebElement, budget: Budget },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::SupportedUpTo(_) => "SupportedUpTo",
            Verdict::CertifiedRefuted { .. } => "CertifiedRefuted",
            Verdict::CandidateRefuted { .. } => "CandidateRefuted",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn witness(&self) -> Option<&WebElement> {
        match self {
            Verdict::CertifiedRefuted { witness, .. } | Verdict::CandidateRefuted { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn budget(&self) -> Option<&Budget> {
        match self {
            Verdict::SupportedUpTo(b)
            | Verdict::CertifiedRefuted { budget: b, .. }
            | Verdict::CandidateRefuted { budget: b, .. } => Some(b),
            Verdict::Inconclusive { .. } => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::SupportedUpTo(b) => write!(f, "SupportedUpTo({b})"),
            Verdict::CertifiedRefuted { witness, budget, .. } => write!(f, "CertifiedRefuted({witness}; {budget})"),
            Verdict::CandidateRefuted { witness, budget } => write!(f, "CandidateRefuted({witness}; {budget})"),
            Verdict::Inconclusive { reason } => write!(f, "Inconclusive({reason})"),
        }
    }
}

/// Budgets for the left-hand slices, the budget for right-hand membership,
/// evaluation limits and normalization fuel.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub schedule: Vec<Budget>,
    pub right: Budget,
    pub limits: Limits,
    pub fuel: usize,
}

impl CheckConfig {
    /// Left slices at ranks `0..=left_rank`, right membership one rank higher
    /// when the limits allow it.
    pub fn ranks(
        web: &Web,
        scope: Option<usize>,
        left_rank: usize,
        limits: &Limits,
        fuel: usize,
    ) -> Result<CheckConfig, TheoryError> {
        let right_rank = (left_rank + 1).min(limits.max_rank).max(left_rank);
        let right = Budget::for_web(web, scope, right_rank, limits)?;
        let schedule = (0..=left_rank).map(|r| right.with_rank(r)).collect();
        Ok(CheckConfig { schedule, right, limits: *limits, fuel })
    }
}

fn closed(t: &Term) -> Result<(), TheoryError> {
    if t.is_closed() && t.free_names().is_empty() {
        Ok(())
    } else {
        Err(TheoryError::NotClosed(t.to_string()))
    }
}

fn is_budget_limit(e: &InterpError) -> bool {
    matches!(
        e,
        InterpError::SubsetLimit { .. }
            | InterpError::StepLimit(_)
            | InterpError::Completion(
                CompletionError::ElementLimit { .. } | CompletionError::RankLimit { .. } | CompletionError::ScopeLimit { .. }
            )
    )
}

/// Scans the slices of `m` for an element missing from `n`.
pub fn check_inequation(web: &Web, m: &Term, n: &Term, cfg: &CheckConfig) -> Result<Verdict, TheoryError> {
    closed(m)?;
    closed(n)?;
    if cfg.schedule.is_empty() {
        return Err(TheoryError::EmptySchedule);
    }
    let env = Env::empty();
    let n_normal = matches!(normalize(n, cfg.fuel), Normalized::Normal(_));
    let decidable = n_normal && web.effectivity() == Effectivity::Effective;
    let mut completed: Option<Budget> = None;
    let mut checked = std::collections::BTreeSet::new();
    for b in &cfg.schedule {
        let left = match interp_slice(web, m, &env, b, &cfg.limits) {
            Ok(s) => s.elements,
            Err(e) if is_budget_limit(&e) => break,
            Err(e) => return Err(e.into()),
        };
        let fresh: Vec<WebElement> = left.into_iter().filter(|x| !checked.contains(x)).collect();
        let found = match members_at(web, &fresh, n, &env, &cfg.right, &cfg.limits) {
            Ok(f) => f,
            Err(e) if is_budget_limit(&e) => break,
            Err(e) => return Err(e.into()),
        };
        for (x, found) in fresh.into_iter().zip(found) {
            if found {
                checked.insert(x);
                continue;
            }
            if !decidable {
                return Ok(Verdict::CandidateRefuted { witness: x, budget: cfg.right.clone() });
            }
            if decide_member_normal(web, &x, n, &env, cfg.fuel)? {
                checked.insert(x);
                continue;
            }
            let subpair = extract_witness_subpair(web, m, &env, &x, b, &cfg.limits)?;
            return Ok(Verdict::CertifiedRefuted { witness: x, subpair, budget: b.clone() });
        }
        completed = Some(b.clone());
    }
    Ok(match completed {
        Some(b) => Verdict::SupportedUpTo(b),
        None => Verdict::Inconclusive { reason: format!("budget {} exceeds the evaluation limits", cfg.schedule[0]) },
    })
}

/// Both directions `M ⊑ N` and `N ⊑ M`.
pub fn check_equation(web: &Web, m: &Term, n: &Term, cfg: &CheckConfig) -> Result<(Verdict, Verdict), TheoryError> {
    Ok((check_inequation(web, m, n, cfg)?, check_inequation(web, n, m, cfg)?))
}

/// Corpus members `N` with `N ⊑ M` supported up to the budget.
pub fn observation_set(corpus: &[Term], web: &Web, m: &Term, cfg: &CheckConfig) -> Result<Vec<Term>, TheoryError> {
    let mut out = Vec::new();
    for n in corpus {
        if let Verdict::SupportedUpTo(_) = check_inequation(web, n, m, cfg)? {
            out.push(n.clone());
        }
    }
    Ok(out)
}
