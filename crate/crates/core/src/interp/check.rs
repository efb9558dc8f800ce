use serde_json::{json, Value};

use crate::algebra::{reduct_matrix, submatrix, subuniverses, Elem, Matrix};
use crate::congruence::reduce;
use crate::error::{Error, Result};
use crate::logic::{check_equivalential, in_mod_eq, CongruenceFormulaSet, LogicPresentation};
use crate::subset::Subset;
use crate::syntax::Translation;

/// Which target matrices an interpretation check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterpretationMode {
    /// The reductions of the target's generators. Refutations are sound;
    /// acceptance is relative to the generators.
    Generators,
    /// Every submatrix of the reduced generators, given a validated set of
    /// congruence formulas for the target.
    Equivalential,
}

impl InterpretationMode {
    pub fn name(self) -> &'static str {
        match self {
            InterpretationMode::Generators => "via-R-generators",
            InterpretationMode::Equivalential => "via-S-of-reduced-generators",
        }
    }
}

/// One target matrix `<B, G>` and whether `<B^τ, G>` lies in `Mod≡` of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub generator: usize,
    /// Elements of the reduced generator spanned by the submatrix.
    pub subuniverse: Vec<Elem>,
    pub in_mod_eq: bool,
}

#[derive(Clone, Debug)]
pub struct InterpretationCertificate {
    pub translation: Translation,
    pub source: String,
    pub target: String,
    pub mode: InterpretationMode,
    pub delta: Option<CongruenceFormulaSet>,
    pub evidence: Vec<Evidence>,
    pub holds: bool,
}

impl InterpretationCertificate {
    /// Whether acceptance only speaks for the listed generators.
    pub fn generator_relative(&self) -> bool {
        self.mode == InterpretationMode::Generators
    }

    /// The failing target matrix, if any.
    pub fn failure(&self) -> Option<&Evidence> {
        self.evidence.iter().find(|e| !e.in_mod_eq)
    }

    /// Re-runs the check and compares the outcome and evidence.
    pub fn verify(&self, source: &LogicPresentation, target: &LogicPresentation) -> Result<bool> {
        let again = check_interpretation(&self.translation, source, target, self.mode, self.delta.as_ref())?;
        Ok(again.holds == self.holds && again.evidence == self.evidence)
    }

    pub fn to_json(&self) -> Value {
        let tr = &self.translation;
        let images: serde_json::Map<String, Value> = (0..tr.source().len())
            .map(|s| {
                let args: Vec<String> = (1..=tr.source().arity(s)).map(|i| format!("x{i}")).collect();
                (
                    format!("{}({})", tr.source().name(s), args.join(", ")),
                    Value::String(tr.image(s).display(tr.target()).to_string()),
                )
            })
            .collect();
        json!({
            "source": self.source,
            "target": self.target,
            "translation": images,
            "mode": self.mode.name(),
            "generator_relative": self.generator_relative(),
            "delta": self.delta.as_ref().map(|d| d
                .terms()
                .iter()
                .map(|t| t.display(tr.target()).to_string())
                .collect::<Vec<_>>()),
            "holds": self.holds,
            "evidence": self.evidence.iter().map(|e| json!({
                "generator": e.generator,
                "subuniverse": e.subuniverse,
                "in_mod_eq": e.in_mod_eq,
            })).collect::<Vec<_>>(),
        })
    }
}

/// The target matrices an interpretation must be checked on, computed once per
/// target and mode.
#[derive(Clone, Debug)]
pub struct CheckPlan {
    pub mode: InterpretationMode,
    pub delta: Option<CongruenceFormulaSet>,
    pub matrices: Vec<(usize, Vec<Elem>, Matrix)>,
}

impl CheckPlan {
    pub fn new(
        target: &LogicPresentation,
        mode: InterpretationMode,
        delta: Option<&CongruenceFormulaSet>,
    ) -> Result<Self> {
        let gens = target.require_generators()?;
        let mut matrices = Vec::new();
        match mode {
            InterpretationMode::Generators => {
                for (i, g) in gens.iter().enumerate() {
                    let r = reduce(g);
                    matrices.push((i, (0..r.size()).collect(), r));
                }
            }
            InterpretationMode::Equivalential => {
                let delta = delta.ok_or_else(|| {
                    Error::Invalid("equivalential mode needs congruence formulas for the target".into())
                })?;
                if !check_equivalential(target, delta)? {
                    return Err(Error::Invalid(format!(
                        "the congruence formulas do not validate for `{}`",
                        target.name()
                    )));
                }
                for (i, g) in gens.iter().enumerate() {
                    let r = reduce(g);
                    for s in subuniverses(r.algebra()) {
                        matrices.push((i, s.to_vec(), submatrix(&r, &s)?));
                    }
                }
            }
        }
        Ok(CheckPlan {
            mode,
            delta: delta.cloned(),
            matrices,
        })
    }

    /// Checks `tr` on every planned matrix, stopping at the first failure.
    pub fn run(
        &self,
        tr: &Translation,
        source: &LogicPresentation,
        target: &LogicPresentation,
    ) -> Result<InterpretationCertificate> {
        if tr.source() != source.signature() || tr.target() != target.signature() {
            return Err(Error::SignatureMismatch(format!(
                "translation does not go from `{}` to `{}`",
                source.name(),
                target.name()
            )));
        }
        let mut evidence = Vec::with_capacity(self.matrices.len());
        let mut holds = true;
        for (generator, elems, m) in &self.matrices {
            let ok = in_mod_eq(source, &reduct_matrix(tr, m)?)?;
            evidence.push(Evidence {
                generator: *generator,
                subuniverse: elems.clone(),
                in_mod_eq: ok,
            });
            if !ok {
                holds = false;
                break;
            }
        }
        Ok(InterpretationCertificate {
            translation: tr.clone(),
            source: source.name().to_string(),
            target: target.name().to_string(),
            mode: self.mode,
            delta: self.delta.clone(),
            evidence,
            holds,
        })
    }
}

/// Checks that `<B^τ, G>` is in `Mod≡(source)` for every target matrix the mode requires.
pub fn check_interpretation(
    tr: &Translation,
    source: &LogicPresentation,
    target: &LogicPresentation,
    mode: InterpretationMode,
    delta: Option<&CongruenceFormulaSet>,
) -> Result<InterpretationCertificate> {
    CheckPlan::new(target, mode, delta)?.run(tr, source, target)
}

/// Certifies `second ∘ first` after certifying both parts.
pub fn check_composition(
    first: &InterpretationCertificate,
    second: &InterpretationCertificate,
    logics: [&LogicPresentation; 3],
) -> Result<InterpretationCertificate> {
    let [l0, l1, l2] = logics;
    if !first.verify(l0, l1)? || !second.verify(l1, l2)? || !first.holds || !second.holds {
        return Err(Error::Invalid("composition needs two verified interpretations".into()));
    }
    let composite = first.translation.compose(&second.translation)?;
    check_interpretation(&composite, l0, l2, second.mode, second.delta.as_ref())
}

/// The reduct matrix of a target generator's reduction, for reporting failures.
pub fn witness_matrix(
    cert: &InterpretationCertificate,
    target: &LogicPresentation,
) -> Result<Option<Matrix>> {
    let Some(e) = cert.failure() else {
        return Ok(None);
    };
    let gens = target.require_generators()?;
    let r = reduce(&gens[e.generator]);
    let s = Subset::from_elems(r.size(), e.subuniverse.iter().copied());
    Ok(Some(reduct_matrix(&cert.translation, &submatrix(&r, &s)?)?))
}
