use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::syntax::{Rule, Signature, Term};

/// How a logic is given: by a finite Hilbert-style rule set or by finitely many finite matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Rules(Vec<Rule>),
    Matrices(Vec<Matrix>),
}

/// A logic over a fixed signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicPresentation {
    name: String,
    signature: Signature,
    presentation: Presentation,
}

impl LogicPresentation {
    pub fn from_rules(name: impl Into<String>, signature: Signature, rules: Vec<Rule>) -> Result<Self> {
        for r in &rules {
            r.check(&signature)?;
        }
        Ok(LogicPresentation {
            name: name.into(),
            signature,
            presentation: Presentation::Rules(rules),
        })
    }

    /// The logic induced by a finite class of matrices.
    pub fn from_matrices(
        name: impl Into<String>,
        signature: Signature,
        generators: Vec<Matrix>,
    ) -> Result<Self> {
        if let Some(m) = generators.iter().find(|m| m.signature() != &signature) {
            return Err(Error::SignatureMismatch(format!(
                "generator with {} symbols for a logic with {}",
                m.signature().len(),
                signature.len()
            )));
        }
        Ok(LogicPresentation {
            name: name.into(),
            signature,
            presentation: Presentation::Matrices(generators),
        })
    }

    /// The inconsistent logic, axiomatized by `|- x1`.
    pub fn inconsistent(signature: Signature) -> Self {
        LogicPresentation {
            name: "inconsistent".into(),
            signature,
            presentation: Presentation::Rules(vec![Rule::new(vec![], Term::Var(1))]),
        }
    }

    /// The almost inconsistent logic, axiomatized by `x1 |- x2`.
    pub fn almost_inconsistent(signature: Signature) -> Self {
        LogicPresentation {
            name: "almost-inconsistent".into(),
            signature,
            presentation: Presentation::Rules(vec![Rule::new(vec![Term::Var(1)], Term::Var(2))]),
        }
    }

    /// The inconsistent logic as the logic of `<1, {1}>`.
    pub fn inconsistent_by_matrices(signature: Signature) -> Self {
        let one = Matrix::trivial(signature.clone());
        LogicPresentation {
            name: "inconsistent".into(),
            signature,
            presentation: Presentation::Matrices(vec![one]),
        }
    }

    /// The almost inconsistent logic as the logic of `<1, {1}>` and `<1, ∅>`.
    pub fn almost_inconsistent_by_matrices(signature: Signature) -> Self {
        let one = Matrix::trivial(signature.clone());
        let empty = one
            .with_designated(crate::subset::Subset::empty(1))
            .expect("same universe");
        LogicPresentation {
            name: "almost-inconsistent".into(),
            signature,
            presentation: Presentation::Matrices(vec![one, empty]),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn generators(&self) -> Option<&[Matrix]> {
        match &self.presentation {
            Presentation::Matrices(ms) => Some(ms),
            Presentation::Rules(_) => None,
        }
    }

    pub fn rules(&self) -> Option<&[Rule]> {
        match &self.presentation {
            Presentation::Rules(rs) => Some(rs),
            Presentation::Matrices(_) => None,
        }
    }

    pub(crate) fn require_generators(&self) -> Result<&[Matrix]> {
        self.generators().ok_or_else(|| {
            Error::Unsupported(format!(
                "`{}` is rule-presented; this query needs a matrix presentation",
                self.name
            ))
        })
    }

    pub(crate) fn check_signature(&self, sig: &Signature) -> Result<()> {
        if sig != &self.signature {
            return Err(Error::SignatureMismatch(format!(
                "structure is not over the signature of `{}`",
                self.name
            )));
        }
        Ok(())
    }
}
