use crate::algebra::Matrix;
use crate::congruence::{is_congruence, Partition};
use crate::error::{Error, Result};
use crate::logic::consequence::{counterexample, Counterexample};
use crate::logic::LogicPresentation;
use crate::syntax::{Rule, Signature, Substitution, Term, Translation};

/// A finite non-empty set `Δ(x1, x2)` of binary formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceFormulaSet {
    terms: Vec<Term>,
}

impl CongruenceFormulaSet {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Invalid("a congruence formula set must be non-empty".into()));
        }
        if let Some(v) = terms.iter().flat_map(Term::vars).find(|&v| v != 1 && v != 2) {
            return Err(Error::Invalid(format!(
                "congruence formulas may only use x1 and x2, found x{v}"
            )));
        }
        Ok(CongruenceFormulaSet { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// `Δ(a, b)`: every formula with `x1 := a`, `x2 := b`.
    pub fn instantiate(&self, a: &Term, b: &Term) -> Vec<Term> {
        let s = Substitution::new().with(1, a.clone()).with(2, b.clone());
        self.terms.iter().map(|t| t.substitute(&s)).collect()
    }
}

/// The rule families characterizing `Δ` as a set of congruence formulas.
pub fn equivalential_rules(sig: &Signature, delta: &CongruenceFormulaSet) -> Vec<(String, Rule)> {
    let (x, y) = (Term::Var(1), Term::Var(2));
    let mut out = Vec::new();
    for t in delta.instantiate(&x, &x) {
        out.push(("reflexivity".to_string(), Rule::new(vec![], t)));
    }
    let mut premises = vec![x.clone()];
    premises.extend(delta.instantiate(&x, &y));
    out.push(("detachment".to_string(), Rule::new(premises, y)));
    for sym in 0..sig.len() {
        let n = sig.arity(sym) as u32;
        let xs: Vec<Term> = (1..=n).map(Term::Var).collect();
        let ys: Vec<Term> = (n + 1..=2 * n).map(Term::Var).collect();
        let premises: Vec<Term> = xs
            .iter()
            .zip(&ys)
            .flat_map(|(a, b)| delta.instantiate(a, b))
            .collect();
        let lhs = Term::App(sym, xs.clone());
        let rhs = Term::App(sym, ys.clone());
        for c in delta.instantiate(&lhs, &rhs) {
            out.push((format!("replacement for {}", sig.name(sym)), Rule::new(premises.clone(), c)));
        }
    }
    out
}

/// The first equivalential rule that fails, with a refuting valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailedRule {
    pub family: String,
    pub rule: Rule,
    pub counterexample: Counterexample,
}

pub fn check_equivalential(logic: &LogicPresentation, delta: &CongruenceFormulaSet) -> Result<bool> {
    Ok(equivalential_failure(logic, delta)?.is_none())
}

pub fn equivalential_failure(
    logic: &LogicPresentation,
    delta: &CongruenceFormulaSet,
) -> Result<Option<FailedRule>> {
    for t in delta.terms() {
        t.check(logic.signature())?;
    }
    for (family, rule) in equivalential_rules(logic.signature(), delta) {
        if let Some(c) = counterexample(logic, &rule.premises, &rule.conclusion)? {
            return Ok(Some(FailedRule {
                family,
                rule,
                counterexample: c,
            }));
        }
    }
    Ok(None)
}

/// The relation `a ~ b` iff `Δ(a, b) ⊆ F`. Errors unless it is a congruence.
pub fn leibniz_via_delta(delta: &CongruenceFormulaSet, m: &Matrix) -> Result<Partition> {
    for t in delta.terms() {
        t.check(m.signature())?;
    }
    let n = m.size();
    let alg = m.algebra();
    let mut rel = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            let env = [0, a, b];
            rel[a * n + b] = delta
                .terms()
                .iter()
                .all(|t| m.is_designated(alg.eval(t, &env).expect("binary formulas")));
        }
    }
    let p = Partition::from_key(n, |a| rel[a * n..(a + 1) * n].to_vec());
    // The kernel of rows equals the relation only when the relation is an equivalence.
    let exact = (0..n).all(|a| (0..n).all(|b| rel[a * n + b] == p.relates(a, b)));
    if !exact || !is_congruence(alg, &p) {
        return Err(Error::NotACongruence);
    }
    Ok(p)
}

/// `τ[Δ]` over the target signature.
pub fn transfer_delta(tr: &Translation, delta: &CongruenceFormulaSet) -> Result<CongruenceFormulaSet> {
    let terms = delta
        .terms()
        .iter()
        .map(|t| tr.translate(t))
        .collect::<Result<Vec<_>>>()?;
    CongruenceFormulaSet::new(terms)
}
