use std::collections::BTreeSet;

use crate::algebra::{enumerate_homomorphisms, reduct_by_translation, Elem, FiniteAlgebra, Matrix};
use crate::casebook::analysis::{
    constants_reaching_e, negation_class_member, semilattice_tables, unary_algebras, values_at_zero,
};
use crate::casebook::*;
use crate::congruence::{is_congruence, leibniz_congruence, suszko_by_polynomials, suszko_congruence, Partition};
use crate::error::{Error, Result};
use crate::interp::{check_interpretation, count_terms, search_interpretation, InterpretationMode};
use crate::logic::{
    check_equivalential, enumerate_filters, has_theorems, in_mod_eq, is_filter, leibniz_via_delta, FilterOracle,
};
use crate::subset::Subset;
use crate::syntax::{Signature, Term, Translation};

/// Identifiers and one-line summaries of the casebook entries.
pub const ENTRIES: [(&str, &str); 10] = [
    ("or-two-matrices", "Leibniz blocks of <A,{1}> and <A,{c,1}>; Suszko of <A,{1}> is the identity"),
    ("or-models-small", "models of the join logic with identity Suszko congruence on 2 or 3 elements are trivial"),
    ("neg-fragment-class", "identity-Suszko models of the negation fragment on at most 4 elements"),
    ("neg-presentations", "rule and matrix presentations of the negation fragment have the same filters"),
    ("no-constants-bounded", "terms over join, neg, e containing e send 0 into {e,a,c}"),
    ("term-equivalence", "the imp_beta with beta != alpha are constant and d, c, 1 are definable"),
    ("kappa-equivalential", "{x imp_alpha y} is a set of congruence formulas for kappa = 3"),
    ("identity-interpretation", "the identity-symbol translation interprets the join logic in kappa3"),
    ("leibniz-parametric", "{0,d},{a,c,e},{b},{1} is a congruence of every reduct avoiding imp_alpha"),
    ("hasse-disambiguation", "which reading of the diagram of A matches the stated facts"),
];

pub fn verify(id: &str) -> Result<Report> {
    let summary = ENTRIES
        .iter()
        .find(|(e, _)| *e == id)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Invalid(format!("unknown casebook entry `{id}`")))?;
    let id = ENTRIES.iter().find(|(e, _)| *e == id).map(|(e, _)| *e).expect("found above");
    let checks = match id {
        "or-two-matrices" => or_two_matrices()?,
        "or-models-small" => or_models_small()?,
        "neg-fragment-class" => neg_fragment_class(4)?,
        "neg-presentations" => neg_presentations(4)?,
        "no-constants-bounded" => no_constants_bounded(6),
        "term-equivalence" => term_equivalence(3)?,
        "kappa-equivalential" => kappa_equivalential(3)?,
        "identity-interpretation" => identity_interpretation()?,
        "leibniz-parametric" => leibniz_parametric(3)?,
        "hasse-disambiguation" => hasse_disambiguation()?,
        _ => unreachable!("every listed entry has a verifier"),
    };
    Ok(Report { id, summary, checks })
}

pub fn verify_all() -> Result<Vec<Report>> {
    ENTRIES.iter().map(|(id, _)| verify(id)).collect()
}

fn blocks(alg: &FiniteAlgebra, p: &Partition) -> String {
    p.display_with(alg)
}

/// `{a,e,c},{0,d},{b},{1}` as a partition of `A`.
pub fn blocks_for_one() -> Partition {
    Partition::from_blocks(7, &[vec![A, E, C], vec![ZERO, D], vec![B], vec![ONE]])
}

/// `{0},{a},{e},{b,d},{c,1}` as a partition of `A`.
pub fn blocks_for_c_one() -> Partition {
    Partition::from_blocks(7, &[vec![ZERO], vec![A], vec![E], vec![B, D], vec![C, ONE]])
}

fn or_two_matrices() -> Result<Vec<Check>> {
    let a = build_a();
    let or = or_logic();
    let [m1, m2]: [Matrix; 2] = or_matrices().try_into().expect("two generators");
    let suszko = suszko_congruence(&or, &m1)?;
    Ok(vec![
        Check::new("leibniz {1}", blocks(&a, &blocks_for_one()), blocks(&a, &leibniz_congruence(&m1))),
        Check::new("leibniz {c,1}", blocks(&a, &blocks_for_c_one()), blocks(&a, &leibniz_congruence(&m2))),
        Check::new("{c,1} is a filter", true, is_filter(&or, &m2)?),
        Check::new("filters on A", show_sets(&a, &preimage_filters(&a)), show_sets(&a, &enumerate_filters(&or, &a)?)),
        Check::new("suszko {1}", blocks(&a, &Partition::identity(7)), blocks(&a, &suszko)),
        Check::new(
            "suszko {1} by polynomials",
            blocks(&a, &suszko),
            blocks(&a, &suszko_by_polynomials(&or, &m1)?),
        ),
        Check::new("<A,{1}> in Mod=", true, in_mod_eq(&or, &m1)?),
    ])
}

fn show_sets(alg: &FiniteAlgebra, sets: &[Subset]) -> String {
    sets.iter()
        .map(|f| format!("{{{}}}", f.iter().map(|e| alg.label(e)).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(",")
}

/// Preimages of the designated sets of the generators under endomorphisms of
/// `A`, closed under intersection, plus `A` itself, in popcount order.
fn preimage_filters(a: &FiniteAlgebra) -> Vec<Subset> {
    let mut sets: BTreeSet<Vec<Elem>> = BTreeSet::from([(0..a.size()).collect()]);
    for g in or_matrices() {
        for h in enumerate_homomorphisms(a, g.algebra(), None) {
            sets.insert((0..a.size()).filter(|&x| g.is_designated(h.apply(x))).collect());
        }
    }
    loop {
        let snapshot: Vec<Vec<Elem>> = sets.iter().cloned().collect();
        let before = sets.len();
        for x in &snapshot {
            for y in &snapshot {
                sets.insert(x.iter().filter(|e| y.contains(e)).copied().collect());
            }
        }
        if sets.len() == before {
            break;
        }
    }
    let mut out: Vec<Subset> = sets.iter().map(|s| Subset::from_elems(a.size(), s.iter().copied())).collect();
    out.sort_by_key(Subset::popcount_key);
    out
}

fn or_models_small() -> Result<Vec<Check>> {
    let or = or_logic();
    let mut examined = 0usize;
    let mut members = Vec::new();
    for n in 2..=3 {
        for join in semilattice_tables(n) {
            for consts in 0..n * n * n {
                let (ca, cb, c0) = (consts / (n * n), consts / n % n, consts % n);
                let alg = FiniteAlgebra::new(
                    signature_a(),
                    n,
                    vec![join.clone(), vec![ca; n], vec![cb; n], vec![c0; n]],
                )?;
                let mut oracle = FilterOracle::new(&or, &alg)?;
                for mask in 0..1u64 << n {
                    examined += 1;
                    let f = Subset::from_mask(n, mask);
                    if !oracle.is_filter(&f) {
                        continue;
                    }
                    let m = Matrix::new(alg.clone(), f)?;
                    if in_mod_eq(&or, &m)? {
                        members.push(format!("n={n} join={join:?} consts={ca},{cb},{c0} F={mask:b}"));
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::new("matrices examined", 2 * 8 * 4 + 9 * 27 * 8, examined),
        Check::new("non-trivial members", "none", if members.is_empty() { "none".into() } else { members.join("; ") }),
        Check::new("trivial <1,{1}> is a member", true, in_mod_eq(&or, &Matrix::trivial(signature_a()))?),
    ])
}

fn neg_fragment_class(max: usize) -> Result<Vec<Check>> {
    let neg = neg_logic_rules();
    let mut examined = 0usize;
    let mut disagreements = Vec::new();
    for n in 1..=max {
        for alg in unary_algebras(n) {
            for mask in 0..1u64 << n {
                examined += 1;
                let m = Matrix::new(alg.clone(), Subset::from_mask(n, mask))?;
                if in_mod_eq(&neg, &m)? != negation_class_member(&m)? {
                    disagreements.push(format!("neg={:?} F={mask:b}", alg.table(0)));
                }
            }
        }
    }
    let expected: usize = (1..=max).map(|n| n.pow(n as u32) << n).sum();
    Ok(vec![
        Check::new("matrices examined", expected, examined),
        Check::new("disagreements", "none", if disagreements.is_empty() { "none".into() } else { disagreements.join("; ") }),
        Check::new("has theorems", false, has_theorems(&neg)?),
    ])
}

fn neg_presentations(max: usize) -> Result<Vec<Check>> {
    let rules = neg_logic_rules();
    let matrices = neg_logic_matrices();
    let mut examined = 0usize;
    let mut disagreements = Vec::new();
    for n in 1..=max {
        for alg in unary_algebras(n) {
            let mut by_rules = FilterOracle::new(&rules, &alg)?;
            let mut by_matrices = FilterOracle::new(&matrices, &alg)?;
            for mask in 0..1u64 << n {
                examined += 1;
                let f = Subset::from_mask(n, mask);
                if by_rules.is_filter(&f) != by_matrices.is_filter(&f) {
                    disagreements.push(format!("neg={:?} F={mask:b}", alg.table(0)));
                }
            }
        }
    }
    let expected: usize = (1..=max).map(|n| n.pow(n as u32) << n).sum();
    Ok(vec![
        Check::new("matrices examined", expected, examined),
        Check::new("disagreements", "none", if disagreements.is_empty() { "none".into() } else { disagreements.join("; ") }),
    ])
}

fn no_constants_bounded(depth: usize) -> Vec<Check> {
    let alg = build_join_neg_e();
    let vals = values_at_zero(&alg, depth);
    let with_e: BTreeSet<Elem> = vals.iter().filter(|p| p.1).map(|p| p.0).collect();
    let shown = |s: &BTreeSet<Elem>| {
        format!("{{{}}}", s.iter().map(|&e| alg.label(e)).collect::<Vec<_>>().join(","))
    };
    vec![Check::new(
        format!(
            "values at 0 of terms containing e ({} terms of depth <= {depth})",
            count_terms(alg.signature(), 1, depth)
        ),
        shown(&BTreeSet::from([A, E, C])),
        shown(&with_e),
    )]
}

fn term_equivalence(kappa: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for alpha in 0..kappa {
        let alg = build_a_alpha_kappa(alpha, kappa)?;
        let sig = alg.signature().clone();
        let constant_one: Vec<String> = (0..kappa)
            .filter(|&beta| beta != alpha)
            .filter(|&beta| {
                let t = alg.table(sig.lookup(&format!("imp{beta}")).expect("declared"));
                t.iter().all(|&v| v == ONE)
            })
            .map(|beta| format!("imp{beta}"))
            .collect();
        let expected: Vec<String> = (0..kappa).filter(|&b| b != alpha).map(|b| format!("imp{b}")).collect();
        checks.push(Check::new(format!("alpha={alpha}: constant imps"), expected.join(","), constant_one.join(",")));
        let imp_alpha = alg.table(sig.lookup(&format!("imp{alpha}")).expect("declared"));
        let indicator = (0..49).all(|i| imp_alpha[i] == if i / 7 == i % 7 { ONE } else { ZERO });
        checks.push(Check::new(format!("alpha={alpha}: imp{alpha} is the equality indicator"), true, indicator));
        let neg = sig.require("neg")?;
        for (name, from) in [("d", "zero"), ("c", "a"), ("one", "b")] {
            let defined = Term::App(neg, vec![Term::App(sig.require(from)?, vec![Term::Var(1)])]);
            checks.push(Check::new(
                format!("alpha={alpha}: {name} = neg({from})"),
                true,
                alg.term_table(&defined, 1)? == alg.table(sig.require(name)?),
            ));
        }
    }
    Ok(checks)
}

fn kappa_equivalential(kappa: usize) -> Result<Vec<Check>> {
    let logic = kappa_logic(kappa)?;
    let delta = kappa_delta(kappa);
    let mut checks = vec![Check::new("check_equivalential", true, check_equivalential(&logic, &delta)?)];
    for (alpha, g) in logic.generators().expect("matrix presented").iter().enumerate() {
        checks.push(Check::new(
            format!("alpha={alpha}: leibniz via delta"),
            blocks(g.algebra(), &leibniz_congruence(g)),
            blocks(g.algebra(), &leibniz_via_delta(&delta, g)?),
        ));
    }
    Ok(checks)
}

fn identity_interpretation() -> Result<Vec<Check>> {
    let or = or_logic();
    let k = kappa_logic(3)?;
    let delta = kappa_delta(3);
    let tr = Translation::by_name(or.signature(), k.signature())?;
    let cert = check_interpretation(&tr, &or, &k, InterpretationMode::Equivalential, Some(&delta))?;
    let search = search_interpretation(&or, &k, 1, InterpretationMode::Equivalential, Some(&delta))?;
    Ok(vec![
        Check::new("certified", true, cert.holds),
        Check::new("certificate re-verifies", true, cert.verify(&or, &k)?),
        Check::new(
            "search at depth 1 finds",
            "identity-symbol translation",
            match &search.found {
                Some(c) if c.translation == tr => "identity-symbol translation".to_string(),
                Some(c) => format!("{}", c.to_json()["translation"]),
                None => format!("nothing in {} candidates", search.candidates),
            },
        ),
    ])
}

/// Whether `{0,d},{a,c,e},{b},{1}` is a congruence of `A_{α,κ}^τ` for a
/// translation `τ` into the signature of `A_{α,κ}` that never uses `imp_α`.
pub fn parametric_leibniz_check(tr: &Translation, alpha: usize, kappa: usize) -> Result<bool> {
    let alg = build_a_alpha_kappa(alpha, kappa)?;
    if tr.target() != alg.signature() {
        return Err(Error::SignatureMismatch("translation must target the A_{alpha,kappa} signature".into()));
    }
    let forbidden = alg.signature().require(&format!("imp{alpha}"))?;
    if tr.images().iter().any(|t| t.contains_symbol(forbidden)) {
        return Err(Error::Invalid(format!("the translation uses imp{alpha}")));
    }
    Ok(is_congruence(&reduct_by_translation(tr, &alg)?, &blocks_for_one()))
}

fn leibniz_parametric(kappa: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for alpha in 0..kappa {
        let target = signature_a_kappa(kappa);
        // The whole imp_alpha-free reduct: every avoiding translation factors through it.
        let keep: Vec<usize> = (0..target.len()).filter(|&s| target.name(s) != format!("imp{alpha}")).collect();
        let reduct_sig = Signature::new(keep.iter().map(|&s| (target.name(s).to_string(), target.arity(s))))?;
        let images = keep
            .iter()
            .map(|&s| Term::App(s, (1..=target.arity(s) as u32).map(Term::Var).collect()))
            .collect();
        let tr = Translation::new(reduct_sig, target.clone(), images)?;
        checks.push(Check::new(
            format!("alpha={alpha}: imp{alpha}-free reduct"),
            true,
            parametric_leibniz_check(&tr, alpha, kappa)?,
        ));
        let alg = build_a_alpha_kappa(alpha, kappa)?;
        checks.push(Check::new(
            format!("alpha={alpha}: full expansion"),
            false,
            is_congruence(&alg, &blocks_for_one()),
        ));
    }
    Ok(checks)
}

fn hasse_disambiguation() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut consistent = Vec::new();
    for cand in HasseCandidate::ALL {
        let a = build_a_with(cand);
        let one = Matrix::from_elems(a.clone(), [ONE])?;
        let c_one = Matrix::from_elems(a.clone(), [C, ONE])?;
        let blocks_ok = leibniz_congruence(&one) == blocks_for_one()
            && leibniz_congruence(&c_one) == blocks_for_c_one();
        let join_neg_e = FiniteAlgebra::new(
            crate::syntax::Signature::new([("join", 2), ("neg", 1), ("e", 1)])?,
            7,
            vec![a.table(0).to_vec(), NEG.to_vec(), vec![E; 7]],
        )?;
        let e_values: BTreeSet<Elem> = values_at_zero(&join_neg_e, 6)
            .into_iter()
            .filter(|p| p.1)
            .map(|p| p.0)
            .collect();
        let e_ok = e_values.iter().all(|v| [E, A, C].contains(v));
        let unreachable_ok = constants_reaching_e(cand).is_empty();
        checks.push(Check::new(format!("{}: Leibniz blocks", cand.name()), true, blocks_ok));
        checks.push(Check::new(format!("{}: e-terms at 0", cand.name()), true, e_ok));
        checks.push(Check::new(
            format!("{}: 0, a, b keep e out of the image", cand.name()),
            cand == HasseCandidate::Literal,
            unreachable_ok,
        ));
        if blocks_ok && e_ok && unreachable_ok {
            consistent.push(cand.name());
        }
    }
    checks.push(Check::new("consistent readings", HasseCandidate::Literal.name(), consistent.join(",")));
    Ok(checks)
}
