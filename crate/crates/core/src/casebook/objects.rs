use crate::algebra::{Elem, FiniteAlgebra, Matrix};
use crate::error::{Error, Result};
use crate::logic::LogicPresentation;
use crate::subset::Subset;
use crate::syntax::{Rule, Signature, Term};

/// Element labels of the seven-element semilattice, in index order.
pub const LABELS: [&str; 7] = ["0", "a", "e", "d", "c", "b", "1"];

pub const ZERO: Elem = 0;
pub const A: Elem = 1;
pub const E: Elem = 2;
pub const D: Elem = 3;
pub const C: Elem = 4;
pub const B: Elem = 5;
pub const ONE: Elem = 6;

/// Largest value of the kappa parameter.
pub const KAPPA_CAP: usize = 8;

/// Readings of the diagram of `A`, which does not settle whether `0 < e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HasseCandidate {
    /// The edges as drawn: `e` is minimal and incomparable with `0`, so `e ∨ 0 = c`.
    Literal,
    /// `0` as a bottom element, adding `0 < e`.
    ZeroBelowE,
}

impl HasseCandidate {
    pub const ALL: [HasseCandidate; 2] = [HasseCandidate::Literal, HasseCandidate::ZeroBelowE];

    pub fn name(self) -> &'static str {
        match self {
            HasseCandidate::Literal => "literal",
            HasseCandidate::ZeroBelowE => "zero-below-e",
        }
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(self) -> Vec<(Elem, Elem)> {
        let mut edges = vec![
            (ZERO, A),
            (ZERO, D),
            (A, C),
            (D, C),
            (D, B),
            (E, C),
            (C, ONE),
            (B, ONE),
        ];
        if self == HasseCandidate::ZeroBelowE {
            edges.push((ZERO, E));
        }
        edges
    }
}

/// Join table read off a set of covering pairs: the least upper bound in the
/// reflexive-transitive closure. Errors if some pair has no least upper bound.
pub fn join_from_covers(n: usize, covers: &[(Elem, Elem)]) -> Result<Vec<Elem>> {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(x, y) in covers {
        le[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let ubs: Vec<Elem> = (0..n).filter(|&u| le[x][u] && le[y][u]).collect();
            let lub = ubs
                .iter()
                .copied()
                .find(|&u| ubs.iter().all(|&v| le[u][v]))
                .ok_or_else(|| Error::Invalid(format!("{x} and {y} have no least upper bound")))?;
            table.push(lub);
        }
    }
    Ok(table)
}

fn labels() -> Vec<String> {
    LABELS.iter().map(|s| s.to_string()).collect()
}

fn constant(value: Elem) -> Vec<Elem> {
    vec![value; 7]
}

pub fn signature_a() -> Signature {
    Signature::new([("join", 2), ("a", 1), ("b", 1), ("zero", 1)]).expect("valid signature")
}

/// `A` under a chosen reading of the diagram.
pub fn build_a_with(candidate: HasseCandidate) -> FiniteAlgebra {
    let join = join_from_covers(7, &candidate.covers()).expect("both readings are semilattices");
    FiniteAlgebra::new(signature_a(), 7, vec![join, constant(A), constant(B), constant(ZERO)])
        .and_then(|alg| alg.with_labels(labels()))
        .expect("valid tables")
}

/// The seven-element join-semilattice with constants `a`, `b`, `0`.
pub fn build_a() -> FiniteAlgebra {
    build_a_with(HasseCandidate::Literal)
}

/// Negation on `A`: swaps `0,d`, `a,c`, `1,b` and fixes `e`.
pub const NEG: [Elem; 7] = [D, C, E, ZERO, A, ONE, B];

pub fn signature_a_kappa(kappa: usize) -> Signature {
    let mut syms: Vec<(String, usize)> = ["join", "a", "b", "zero", "e", "d", "c", "one"]
        .iter()
        .map(|s| (s.to_string(), if *s == "join" { 2 } else { 1 }))
        .collect();
    syms.push(("neg".into(), 1));
    syms.extend((0..kappa).map(|beta| (format!("imp{beta}"), 2)));
    Signature::new(syms).expect("valid signature")
}

/// `A` expanded with every constant, negation, and `imp_β` for `β < kappa`, where
/// `p imp_β q` is `1` if `p = q` or `β ≠ alpha`, and `0` otherwise.
pub fn build_a_alpha_kappa(alpha: usize, kappa: usize) -> Result<FiniteAlgebra> {
    if alpha >= kappa {
        return Err(Error::Invalid(format!("alpha = {alpha} must be below kappa = {kappa}")));
    }
    if kappa > KAPPA_CAP {
        return Err(Error::Invalid(format!("kappa is capped at {KAPPA_CAP}")));
    }
    let base = build_a();
    let mut tables = base.tables().to_vec();
    for value in [E, D, C, ONE] {
        tables.push(constant(value));
    }
    tables.push(NEG.to_vec());
    for beta in 0..kappa {
        let mut t = Vec::with_capacity(49);
        for p in 0..7 {
            for q in 0..7 {
                t.push(if p == q || beta != alpha { ONE } else { ZERO });
            }
        }
        tables.push(t);
    }
    FiniteAlgebra::new(signature_a_kappa(kappa), 7, tables)?.with_labels(labels())
}

/// `⟨A; ∨, ¬, e⟩`, the algebra of the bounded no-constants check.
pub fn build_join_neg_e() -> FiniteAlgebra {
    let sig = Signature::new([("join", 2), ("neg", 1), ("e", 1)]).expect("valid signature");
    let join = build_a().table(0).to_vec();
    FiniteAlgebra::new(sig, 7, vec![join, NEG.to_vec(), constant(E)])
        .and_then(|a| a.with_labels(labels()))
        .expect("valid tables")
}

pub fn signature_neg() -> Signature {
    Signature::new([("neg", 1)]).expect("valid signature")
}

/// The two-element negation algebra.
pub fn build_two() -> FiniteAlgebra {
    FiniteAlgebra::new(signature_neg(), 2, vec![vec![1, 0]]).expect("valid table")
}

pub fn matrix_two() -> Matrix {
    Matrix::new(build_two(), Subset::from_elems(2, [1])).expect("valid matrix")
}

pub fn or_matrices() -> Vec<Matrix> {
    let a = build_a();
    vec![
        Matrix::from_elems(a.clone(), [ONE]).expect("in range"),
        Matrix::from_elems(a, [C, ONE]).expect("in range"),
    ]
}

/// The logic of `<A, {1}>` and `<A, {c, 1}>`.
pub fn or_logic() -> LogicPresentation {
    LogicPresentation::from_matrices("or", signature_a(), or_matrices()).expect("same signature")
}

/// `x, ¬x |- y`, `x |- ¬¬x`, `¬¬x |- x`.
pub fn neg_rules() -> Vec<Rule> {
    let x = Term::Var(1);
    let nx = Term::App(0, vec![x.clone()]);
    let nnx = Term::App(0, vec![nx.clone()]);
    vec![
        Rule::new(vec![x.clone(), nx], Term::Var(2)),
        Rule::new(vec![x.clone()], nnx.clone()),
        Rule::new(vec![nnx], x),
    ]
}

pub fn neg_logic_rules() -> LogicPresentation {
    LogicPresentation::from_rules("neg", signature_neg(), neg_rules()).expect("well-formed rules")
}

pub fn neg_logic_matrices() -> LogicPresentation {
    LogicPresentation::from_matrices("neg", signature_neg(), vec![matrix_two()])
        .expect("same signature")
}

/// The logic of `{<A_{α,κ}, {1}> : α < κ}`.
pub fn kappa_logic(kappa: usize) -> Result<LogicPresentation> {
    let gens = (0..kappa)
        .map(|alpha| Matrix::from_elems(build_a_alpha_kappa(alpha, kappa)?, [ONE]))
        .collect::<Result<Vec<_>>>()?;
    LogicPresentation::from_matrices(format!("kappa{kappa}"), signature_a_kappa(kappa), gens)
}

/// `Δ(x, y) = {x imp_β y : β < κ}`.
pub fn kappa_delta(kappa: usize) -> crate::logic::CongruenceFormulaSet {
    let sig = signature_a_kappa(kappa);
    let terms = (0..kappa)
        .map(|beta| {
            let sym = sig.lookup(&format!("imp{beta}")).expect("declared");
            Term::App(sym, vec![Term::Var(1), Term::Var(2)])
        })
        .collect();
    crate::logic::CongruenceFormulaSet::new(terms).expect("binary formulas")
}

/// One unary symbol, so that products with these logics have non-empty signatures.
pub fn signature_unit() -> Signature {
    Signature::new([("u", 1)]).expect("valid signature")
}

pub fn inconsistent_logic() -> LogicPresentation {
    LogicPresentation::inconsistent(signature_unit())
}

pub fn almost_inconsistent_logic() -> LogicPresentation {
    LogicPresentation::almost_inconsistent(signature_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::evaluate;
    use std::collections::BTreeMap;

    #[test]
    fn joins_from_the_diagram() {
        let a = build_a();
        assert_eq!(a.apply(0, &[A, B]), ONE);
        assert_eq!(a.apply(0, &[A, E]), C);
        assert_eq!(a.apply(0, &[E, ZERO]), C);
        assert_eq!(a.apply(0, &[D, B]), B);
        for x in 0..7 {
            assert_eq!(a.apply(0, &[x, x]), x);
        }
        let alt = build_a_with(HasseCandidate::ZeroBelowE);
        assert_eq!(alt.apply(0, &[E, ZERO]), E);
    }

    #[test]
    fn expansion_tables() {
        let alg = build_a_alpha_kappa(0, 3).unwrap();
        let sig = alg.signature();
        let neg = sig.lookup("neg").unwrap();
        assert_eq!(alg.apply(neg, &[E]), E);
        let imp1 = sig.lookup("imp1").unwrap();
        let t = Term::App(imp1, vec![Term::Var(1), Term::Var(2)]);
        let env = BTreeMap::from([(1, ZERO), (2, ONE)]);
        assert_eq!(evaluate(&alg, &t, &env).unwrap(), ONE);
        let imp0 = sig.lookup("imp0").unwrap();
        assert_eq!(alg.apply(imp0, &[A, A]), ONE);
        assert_eq!(alg.apply(imp0, &[A, C]), ZERO);
        assert!(build_a_alpha_kappa(3, 3).is_err());
    }

    #[test]
    fn negation_is_an_involution_with_one_fixed_point() {
        for x in 0..7 {
            assert_eq!(NEG[NEG[x]], x);
        }
        assert_eq!((0..7).filter(|&x| NEG[x] == x).count(), 1);
    }
}
