//! Finite computations behind the casebook entries.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::casebook::{HasseCandidate, A, B, E, NEG, ZERO};
use crate::error::{Error, Result};

/// Pairs `(φ(0), e occurs in φ)` over all terms `φ(x)` of depth at most `depth`
/// in `<A; join, neg, e>` (symbols in that order, `e` a constant unary operation).
pub fn values_at_zero(alg: &FiniteAlgebra, depth: usize) -> BTreeSet<(Elem, bool)> {
    let mut reached = BTreeSet::from([(ZERO, false)]);
    for _ in 0..depth {
        let mut next = reached.clone();
        for &(v, has_e) in &reached {
            next.insert((alg.apply(1, &[v]), has_e));
            next.insert((alg.apply(2, &[v]), true));
            for &(w, w_has_e) in &reached {
                next.insert((alg.apply(0, &[v, w]), has_e || w_has_e));
            }
        }
        if next == reached {
            break;
        }
        reached = next;
    }
    reached
}

/// Unary term functions of `<A; join, neg, 0, a, b, e>` with the constants used as
/// leaves, closed under join and negation. Each comes with whether one of
/// `0, a, b` occurs in some term defining it along that derivation.
pub fn unary_term_functions(join: &[Elem]) -> HashSet<(Vec<Elem>, bool)> {
    let n = NEG.len();
    let mut all: HashSet<(Vec<Elem>, bool)> = HashSet::new();
    let mut frontier: Vec<(Vec<Elem>, bool)> = vec![((0..n).collect(), false)];
    for (c, marked) in [(ZERO, true), (A, true), (B, true), (E, false)] {
        frontier.push((vec![c; n], marked));
    }
    let mut done: Vec<(Vec<Elem>, bool)> = Vec::new();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for f in frontier {
            if all.insert(f.clone()) {
                fresh.push(f);
            }
        }
        let mut next = Vec::new();
        for (f, fm) in &fresh {
            next.push((f.iter().map(|&v| NEG[v]).collect(), *fm));
            for (g, gm) in done.iter().chain(fresh.iter()) {
                next.push((f.iter().zip(g).map(|(&x, &y)| join[x * n + y]).collect(), *fm || *gm));
            }
        }
        done.extend(fresh);
        frontier = next;
    }
    all
}

/// Term functions in which `0`, `a` or `b` occurs but whose image contains `e`.
pub fn constants_reaching_e(candidate: HasseCandidate) -> Vec<Vec<Elem>> {
    let alg = crate::casebook::build_a_with(candidate);
    let mut out: Vec<Vec<Elem>> = unary_term_functions(alg.table(0))
        .into_iter()
        .filter(|(f, marked)| *marked && f.contains(&E))
        .map(|(f, _)| f)
        .collect();
    out.sort();
    out
}

/// Idempotent, commutative, associative binary tables on `n` elements.
pub fn semilattice_tables(n: usize) -> Vec<Vec<Elem>> {
    let pairs: Vec<(Elem, Elem)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for_each_tuple(n, pairs.len(), |vals| {
        let mut t = vec![0; n * n];
        for x in 0..n {
            t[x * n + x] = x;
        }
        for (&(x, y), &v) in pairs.iter().zip(vals) {
            t[x * n + y] = v;
            t[y * n + x] = v;
        }
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]))
        });
        if assoc {
            out.push(t);
        }
    });
    out
}

/// The classification of reduced-Suszko models of the negation fragment: the
/// trivial algebra with any designated set, or a negation algebra (involution
/// with at most one fixed point) whose designated set is empty or a single
/// non-fixed point.
pub fn negation_class_member(m: &Matrix) -> Result<bool> {
    let alg = m.algebra();
    if alg.signature().len() != 1 || alg.signature().arity(0) != 1 {
        return Err(Error::SignatureMismatch("expected a single unary operation".into()));
    }
    if m.size() == 1 {
        return Ok(true);
    }
    let neg = alg.table(0);
    let involution = (0..m.size()).all(|x| neg[neg[x]] == x);
    let fixed = (0..m.size()).filter(|&x| neg[x] == x).count();
    if !involution || fixed > 1 {
        return Ok(false);
    }
    let f = m.designated().to_vec();
    Ok(match f.as_slice() {
        [] => true,
        [x] => neg[*x] != *x,
        _ => false,
    })
}

/// All unary algebras over `signature_neg` of size `n`.
pub fn unary_algebras(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    for_each_tuple(n, n, |t| {
        out.push(
            FiniteAlgebra::new(crate::casebook::signature_neg(), n, vec![t.to_vec()])
                .expect("in-range table"),
        );
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casebook::build_join_neg_e;

    #[test]
    fn e_terms_stay_in_three_values() {
        let vals = values_at_zero(&build_join_neg_e(), 6);
        let with_e: BTreeSet<Elem> = vals.iter().filter(|p| p.1).map(|p| p.0).collect();
        assert_eq!(with_e, BTreeSet::from([E, A, crate::casebook::C]));
    }

    #[test]
    fn semilattice_counts() {
        // Labelled semilattices: 1, 2, 9 on one, two and three elements.
        assert_eq!(semilattice_tables(1).len(), 1);
        assert_eq!(semilattice_tables(2).len(), 2);
        assert_eq!(semilattice_tables(3).len(), 9);
    }

    #[test]
    fn only_the_literal_reading_keeps_e_out_of_reach() {
        assert!(constants_reaching_e(HasseCandidate::Literal).is_empty());
        assert!(!constants_reaching_e(HasseCandidate::ZeroBelowE).is_empty());
    }
}
