use std::collections::HashSet;

use serde_json::json;

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::congruence::suszko_with;
use crate::error::{Error, Result};
use crate::logic::cegar::MatrixEngine;
use crate::logic::{LogicPresentation, Presentation};
use crate::subset::Subset;
use crate::syntax::{Rule, Term};

/// Filter enumeration scans closed sets of universes up to this size.
pub const FILTER_UNIVERSE_CAP: usize = 20;

/// Why a set fails to be a filter: an element outside it that it is forced to contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterWitness {
    /// An instance of a rule with its premises inside the set and conclusion outside.
    Rule {
        rule: usize,
        assignment: Vec<(u32, Elem)>,
        element: Elem,
    },
    /// A term `φ` over `x1..xn` (`x<b+1>` denoting element `b`) that follows from
    /// the set's preimage under that valuation, but evaluates to `element`.
    Consequence { term: Term, element: Elem },
}

impl FilterWitness {
    pub fn element(&self) -> Elem {
        match self {
            FilterWitness::Rule { element, .. } | FilterWitness::Consequence { element, .. } => {
                *element
            }
        }
    }

    pub fn to_json(&self, logic: &LogicPresentation, alg: &FiniteAlgebra) -> serde_json::Value {
        let sig = logic.signature();
        match self {
            FilterWitness::Rule {
                rule,
                assignment,
                element,
            } => {
                let r = &logic.rules().expect("rule witness from a rule presentation")[*rule];
                let asg: serde_json::Map<String, serde_json::Value> = assignment
                    .iter()
                    .map(|(v, e)| (format!("x{v}"), json!(alg.label(*e))))
                    .collect();
                json!({"rule": r.display(sig).to_string(), "assignment": asg, "forced": alg.label(*element)})
            }
            FilterWitness::Consequence { term, element } => json!({
                "term": term.display(sig).to_string(),
                "variables": "x<i> denotes element i-1",
                "forced": alg.label(*element),
            }),
        }
    }
}

struct RuleEngine<'a> {
    alg: &'a FiniteAlgebra,
    rules: &'a [Rule],
    vars: Vec<Vec<u32>>,
}

impl<'a> RuleEngine<'a> {
    fn new(alg: &'a FiniteAlgebra, rules: &'a [Rule]) -> Self {
        let vars = rules.iter().map(|r| r.vars().into_iter().collect()).collect();
        RuleEngine { alg, rules, vars }
    }

    /// Visits every rule instance whose premises lie in `f` and whose conclusion does not.
    fn violations(&self, f: &Subset, mut visit: impl FnMut(usize, &[u32], &[Elem], Elem) -> bool) {
        for (ri, rule) in self.rules.iter().enumerate() {
            let vars = &self.vars[ri];
            let width = vars.iter().max().map_or(0, |&v| v as usize + 1);
            let mut env = vec![0; width];
            let mut stop = false;
            for_each_tuple(self.alg.size(), vars.len(), |vals| {
                if stop {
                    return;
                }
                for (&v, &e) in vars.iter().zip(vals) {
                    env[v as usize] = e;
                }
                let ev = |t: &Term| self.alg.eval(t, &env).expect("rule variables are bound");
                if rule.premises.iter().all(|p| f.contains(ev(p))) {
                    let c = ev(&rule.conclusion);
                    if !f.contains(c) {
                        stop = !visit(ri, vars, vals, c);
                    }
                }
            });
            if stop {
                return;
            }
        }
    }

    fn forced(&self, f: &Subset) -> Option<FilterWitness> {
        let mut found = None;
        self.violations(f, |rule, vars, vals, element| {
            let assignment = vars.iter().copied().zip(vals.iter().copied()).collect();
            found = Some(FilterWitness::Rule {
                rule,
                assignment,
                element,
            });
            false
        });
        found
    }

    fn generate(&self, seed: &Subset) -> Subset {
        let mut f = seed.clone();
        loop {
            let mut add = Vec::new();
            self.violations(&f, |_, _, _, e| {
                add.push(e);
                true
            });
            if add.is_empty() {
                return f;
            }
            for e in add {
                f.insert(e);
            }
        }
    }
}

/// Filter queries for one logic on one algebra; caches work across queries.
pub struct FilterOracle<'a> {
    engine: Engine<'a>,
    size: usize,
}

enum Engine<'a> {
    Rules(RuleEngine<'a>),
    Matrices(MatrixEngine<'a>),
}

impl<'a> FilterOracle<'a> {
    pub fn new(logic: &'a LogicPresentation, alg: &'a FiniteAlgebra) -> Result<Self> {
        logic.check_signature(alg.signature())?;
        let engine = match logic.presentation() {
            Presentation::Rules(rs) => Engine::Rules(RuleEngine::new(alg, rs)),
            Presentation::Matrices(ms) => Engine::Matrices(MatrixEngine::new(alg, ms)),
        };
        Ok(FilterOracle {
            engine,
            size: alg.size(),
        })
    }

    /// `None` when `f` is a filter.
    pub fn witness(&mut self, f: &Subset) -> Option<FilterWitness> {
        match &mut self.engine {
            Engine::Rules(r) => r.forced(f),
            Engine::Matrices(m) => m.forced(f).map(|w| FilterWitness::Consequence {
                term: w.term,
                element: w.element,
            }),
        }
    }

    pub fn is_filter(&mut self, f: &Subset) -> bool {
        self.witness(f).is_none()
    }

    pub fn generate(&mut self, seed: &Subset) -> Subset {
        match &mut self.engine {
            Engine::Rules(r) => r.generate(seed),
            Engine::Matrices(m) => m.generate(seed),
        }
    }

    /// All filters containing `seed`, ordered by cardinality then members.
    pub fn filters_above(&mut self, seed: &Subset) -> Result<Vec<Subset>> {
        if self.size > FILTER_UNIVERSE_CAP {
            return Err(Error::UniverseTooLarge {
                size: self.size,
                cap: FILTER_UNIVERSE_CAP,
            });
        }
        // Every filter above Fg(seed) is reached by adding one element at a time and closing.
        let start = self.generate(seed);
        let mut seen: HashSet<Subset> = HashSet::from([start.clone()]);
        let mut queue = vec![start];
        while let Some(c) = queue.pop() {
            for e in 0..self.size {
                if c.contains(e) {
                    continue;
                }
                let mut next = c.clone();
                next.insert(e);
                let next = self.generate(&next);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_by_key(Subset::popcount_key);
        Ok(out)
    }
}

pub fn is_filter(logic: &LogicPresentation, m: &Matrix) -> Result<bool> {
    Ok(FilterOracle::new(logic, m.algebra())?.is_filter(m.designated()))
}

/// `None` if the designated set is a filter, else an element it is forced to contain.
pub fn check_filter(logic: &LogicPresentation, m: &Matrix) -> Result<Option<FilterWitness>> {
    Ok(FilterOracle::new(logic, m.algebra())?.witness(m.designated()))
}

/// `Fg(seed)`: the least filter of `logic` on `alg` containing `seed`.
pub fn generate_filter(logic: &LogicPresentation, alg: &FiniteAlgebra, seed: &Subset) -> Result<Subset> {
    Ok(FilterOracle::new(logic, alg)?.generate(seed))
}

pub fn enumerate_filters(logic: &LogicPresentation, alg: &FiniteAlgebra) -> Result<Vec<Subset>> {
    FilterOracle::new(logic, alg)?.filters_above(&Subset::empty(alg.size()))
}

pub fn filters_above(logic: &LogicPresentation, alg: &FiniteAlgebra, f: &Subset) -> Result<Vec<Subset>> {
    FilterOracle::new(logic, alg)?.filters_above(f)
}

/// Whether the logic has theorems: the empty set is not a filter on the trivial algebra.
pub fn has_theorems(logic: &LogicPresentation) -> Result<bool> {
    let one = FiniteAlgebra::trivial(logic.signature().clone());
    Ok(!FilterOracle::new(logic, &one)?.is_filter(&Subset::empty(1)))
}

/// Membership in the class of matrices with a filter and identity Suszko congruence.
pub fn in_mod_eq(logic: &LogicPresentation, m: &Matrix) -> Result<bool> {
    let mut oracle = FilterOracle::new(logic, m.algebra())?;
    if !oracle.is_filter(m.designated()) {
        return Ok(false);
    }
    Ok(suszko_with(&mut oracle, m)?.is_identity())
}
