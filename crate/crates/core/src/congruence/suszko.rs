use std::collections::HashSet;

use crate::algebra::{quotient, Elem, FiniteAlgebra, Matrix};
use crate::congruence::{basic_translations, leibniz_congruence, Partition};
use crate::error::{Error, Result};
use crate::logic::{FilterOracle, LogicPresentation};

/// Intersection of the Leibniz congruences of all filters of `logic` extending
/// the designated set of `m`.
pub fn suszko_congruence(logic: &LogicPresentation, m: &Matrix) -> Result<Partition> {
    suszko_with(&mut FilterOracle::new(logic, m.algebra())?, m)
}

pub(crate) fn suszko_with(oracle: &mut FilterOracle<'_>, m: &Matrix) -> Result<Partition> {
    if !oracle.is_filter(m.designated()) {
        return Err(Error::NotAFilter);
    }
    let mut p = leibniz_congruence(m);
    if p.is_identity() {
        return Ok(p);
    }
    for g in oracle.filters_above(m.designated())? {
        p = p.meet(&leibniz_congruence(&m.with_designated(g)?));
        if p.is_identity() {
            break;
        }
    }
    Ok(p)
}

/// All unary polynomial functions, as maps on the universe: the closure of the
/// identity under composition with basic translations.
pub fn unary_polynomials(alg: &FiniteAlgebra) -> Vec<Vec<Elem>> {
    let letters = basic_translations(alg);
    let id: Vec<Elem> = (0..alg.size()).collect();
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut next = 0;
    while next < out.len() {
        let p = out[next].clone();
        next += 1;
        for l in &letters {
            let q: Vec<Elem> = p.iter().map(|&v| l[v]).collect();
            if seen.insert(q.clone()) {
                out.push(q);
            }
        }
    }
    out
}

/// The Suszko congruence via the polynomial characterization: `a` and `b` are
/// related iff `Fg(F, p(a)) = Fg(F, p(b))` for every unary polynomial `p`.
pub fn suszko_by_polynomials(logic: &LogicPresentation, m: &Matrix) -> Result<Partition> {
    let alg = m.algebra();
    let mut oracle = FilterOracle::new(logic, alg)?;
    if !oracle.is_filter(m.designated()) {
        return Err(Error::NotAFilter);
    }
    let generated: Vec<_> = (0..m.size())
        .map(|x| {
            let mut seed = m.designated().clone();
            seed.insert(x);
            oracle.generate(&seed)
        })
        .collect();
    let polys = unary_polynomials(alg);
    Ok(Partition::from_key(m.size(), |a| {
        polys.iter().map(|p| &generated[p[a]]).collect::<Vec<_>>()
    }))
}

/// The reduction `<A/Ω F, F/Ω F>`.
pub fn reduce(m: &Matrix) -> Matrix {
    quotient(m, &leibniz_congruence(m)).expect("the Leibniz congruence is a congruence")
}

pub fn is_reduced(m: &Matrix) -> bool {
    leibniz_congruence(m).is_identity()
}
