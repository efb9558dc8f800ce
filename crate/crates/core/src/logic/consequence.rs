use crate::algebra::{for_each_tuple, Elem};
use crate::error::Result;
use crate::logic::LogicPresentation;
use crate::syntax::{Rule, Term};

/// A generator and valuation sending the premises into the filter but not the conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub generator: usize,
    pub assignment: Vec<(u32, Elem)>,
}

/// Whether `premises ⊢ conclusion` in a matrix-presented logic.
pub fn consequence(logic: &LogicPresentation, premises: &[Term], conclusion: &Term) -> Result<bool> {
    Ok(counterexample(logic, premises, conclusion)?.is_none())
}

pub fn counterexample(
    logic: &LogicPresentation,
    premises: &[Term],
    conclusion: &Term,
) -> Result<Option<Counterexample>> {
    let gens = logic.require_generators()?;
    let rule = Rule::new(premises.to_vec(), conclusion.clone());
    rule.check(logic.signature())?;
    let vars: Vec<u32> = rule.vars().into_iter().collect();
    let width = vars.last().map_or(0, |&v| v as usize + 1);
    for (gi, g) in gens.iter().enumerate() {
        let alg = g.algebra();
        let mut env = vec![0; width];
        let mut found = None;
        for_each_tuple(alg.size(), vars.len(), |vals| {
            if found.is_some() {
                return;
            }
            for (&v, &e) in vars.iter().zip(vals) {
                env[v as usize] = e;
            }
            let holds = |t: &Term| g.is_designated(alg.eval(t, &env).expect("bound"));
            if premises.iter().all(holds) && !holds(conclusion) {
                found = Some(vars.iter().copied().zip(vals.iter().copied()).collect());
            }
        });
        if let Some(assignment) = found {
            return Ok(Some(Counterexample {
                generator: gi,
                assignment,
            }));
        }
    }
    Ok(None)
}
