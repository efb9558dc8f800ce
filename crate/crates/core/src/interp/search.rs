use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interp::{enumerate_terms, CheckPlan, InterpretationCertificate, InterpretationMode};
use crate::logic::{consequence, CongruenceFormulaSet, LogicPresentation, Presentation};
use crate::syntax::{Rule, Term, Translation};

/// Largest candidate space a search will enumerate.
pub const SEARCH_CAP: usize = 50_000_000;

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Option<InterpretationCertificate>,
    /// Size of the candidate space.
    pub candidates: usize,
    /// Candidates up to and including the hit, or all of them on exhaustion.
    pub tried: usize,
}

/// Valid consequences of `logic` used as a cheap necessary condition: for a
/// rule presentation its rules, otherwise every valid `∅ ⊢ t` and `s ⊢ t` with
/// `s ≠ t` among the terms of depth at most one in `x1, x2`.
pub fn sample_consequences(logic: &LogicPresentation) -> Result<Vec<Rule>> {
    match logic.presentation() {
        Presentation::Rules(rules) => Ok(rules.clone()),
        Presentation::Matrices(_) => {
            let terms = enumerate_terms(logic.signature(), 2, 1);
            let mut out = Vec::new();
            for t in &terms {
                if consequence(logic, &[], t)? {
                    out.push(Rule::new(vec![], t.clone()));
                }
            }
            for s in &terms {
                for t in &terms {
                    if s != t && consequence(logic, std::slice::from_ref(s), t)? {
                        out.push(Rule::new(vec![s.clone()], t.clone()));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn translated_rules_hold(tr: &Translation, rules: &[Rule], target: &LogicPresentation) -> Result<bool> {
    for r in rules {
        let premises = r
            .premises
            .iter()
            .map(|p| tr.translate(p))
            .collect::<Result<Vec<Term>>>()?;
        if !consequence(target, &premises, &tr.translate(&r.conclusion)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches translations sending each `n`-ary source symbol to a target term of
/// depth at most `depth` in `x1..xn`. Candidates are ordered with the first
/// source symbol most significant and each image in `enumerate_terms` order;
/// the lowest passing candidate is returned regardless of thread scheduling.
pub fn search_interpretation(
    source: &LogicPresentation,
    target: &LogicPresentation,
    depth: usize,
    mode: InterpretationMode,
    delta: Option<&CongruenceFormulaSet>,
) -> Result<SearchOutcome> {
    if depth == 0 {
        return Err(Error::Invalid("search depth must be at least 1".into()));
    }
    let src = source.signature();
    let images: Vec<Vec<Term>> = (0..src.len())
        .map(|s| enumerate_terms(target.signature(), src.arity(s), depth))
        .collect();
    let radix: Vec<usize> = images.iter().map(Vec::len).collect();
    let candidates = radix
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .filter(|&n| n <= SEARCH_CAP)
        .ok_or_else(|| Error::Invalid(format!("more than {SEARCH_CAP} candidate translations")))?;
    let plan = CheckPlan::new(target, mode, delta)?;
    let samples = sample_consequences(source)?;

    let build = |idx: usize| -> Result<Translation> {
        let digits = crate::algebra::coordinates(&radix, idx);
        let chosen = digits.iter().zip(&images).map(|(&d, ts)| ts[d].clone()).collect();
        Translation::new(src.clone(), target.signature().clone(), chosen)
    };
    let hit = (0..candidates).into_par_iter().find_map_first(|idx| {
        let attempt = || -> Result<Option<InterpretationCertificate>> {
            let tr = build(idx)?;
            if !translated_rules_hold(&tr, &samples, target)? {
                return Ok(None);
            }
            let cert = plan.run(&tr, source, target)?;
            Ok(cert.holds.then_some(cert))
        };
        match attempt() {
            Ok(None) => None,
            Ok(Some(cert)) => Some(Ok((idx, cert))),
            Err(e) => Some(Err(e)),
        }
    });
    match hit.transpose()? {
        Some((idx, cert)) => Ok(SearchOutcome {
            found: Some(cert),
            candidates,
            tried: idx + 1,
        }),
        None => Ok(SearchOutcome {
            found: None,
            candidates,
            tried: candidates,
        }),
    }
}
