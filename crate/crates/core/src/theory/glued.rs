use std::collections::BTreeSet;

use super::{CheckConfig, TheoryError, Verdict};
use crate::completion::{elements_up_to, extend_morphism, Budget, Limits};
use crate::interp::{decide_member_normal, interp_slice, member_semi, members_at, Env};
use crate::lambda::{normalize, Normalized, Term};
use crate::web::{component, retraction_maps, Pair, Web};

fn glued_pair(web: &Web) -> Result<&Pair, TheoryError> {
    web.as_pair().ok_or_else(|| TheoryError::NotFinite(web.name()))
}

/// Component `k` of a gluing, as a web of its own.
fn component_web(web: &Web, k: u32) -> Result<Web, TheoryError> {
    let c = component(glued_pair(web)?, k)?;
    Ok(Web::finite(format!("{}/{k}", web.name()), c))
}

/// Compares the slice of `t` in component `k` with the slice in the gluing at
/// rank `rank`: the component's slice must lie inside the gluing's, and the
/// gluing's elements built from component atoms must be found in the
/// component within `limits.max_rank`.
pub fn component_restriction_check(
    prefix: &Web,
    k: u32,
    t: &Term,
    rank: usize,
    limits: &Limits,
) -> Result<bool, TheoryError> {
    if !t.is_closed() || !t.free_names().is_empty() {
        return Err(TheoryError::NotClosed(t.to_string()));
    }
    let comp = component_web(prefix, k)?;
    let env = Env::empty();
    let cb = Budget::for_web(&comp, None, rank, limits)?;
    let gb = Budget::for_web(prefix, None, rank, limits)?;
    let local: Vec<_> = interp_slice(&comp, t, &env, &cb, limits)?.elements.into_iter().collect();
    if members_at(prefix, &local, t, &env, &gb, limits)?.contains(&false) {
        return Ok(false);
    }
    let pure = elements_up_to(&comp, &cb, limits)?;
    let in_glued = members_at(prefix, &pure, t, &env, &gb, limits)?;
    let schedule: Vec<Budget> = (rank..=limits.max_rank.max(rank)).map(|r| cb.with_rank(r)).collect();
    for (x, inside) in pure.iter().zip(in_glued) {
        if inside && !member_semi(&comp, x, t, &env, &schedule, limits)?.is_found() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports a refutation `m ⋢ n` certified in component `k` along the
/// embedding into the gluing and re-checks it there.
pub fn retract_transport_check(
    glued: &Web,
    k: u32,
    m: &Term,
    n: &Term,
    verdict: &Verdict,
    cfg: &CheckConfig,
) -> Result<bool, TheoryError> {
    let Verdict::CertifiedRefuted { witness, .. } = verdict else {
        return Err(TheoryError::NotCertified);
    };
    let (e, _) = retraction_maps(glued_pair(glued)?, k)?;
    let image = extend_morphism(&e, glued, witness)?;
    let env = Env::empty();
    let scope: BTreeSet<_> = glued_pair(glued)?.atoms().clone();
    let schedule: Vec<Budget> = (0..=cfg.limits.max_rank)
        .map(|r| Budget::with_scope(glued, scope.clone(), r, &cfg.limits))
        .collect::<Result<_, _>>()?;
    if !member_semi(glued, &image, m, &env, &schedule, &cfg.limits)?.is_found() {
        return Ok(false);
    }
    if matches!(normalize(n, cfg.fuel), Normalized::Normal(_)) {
        Ok(!decide_member_normal(glued, &image, n, &env, cfg.fuel)?)
    } else {
        let last = schedule.last().expect("non-empty").clone();
        Ok(!members_at(glued, &[image], n, &env, &last, &cfg.limits)?[0])
    }
}
