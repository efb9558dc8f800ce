use crate::error::{Error, Result};
use crate::syntax::{Signature, Substitution, Term};

/// A map sending each `n`-ary source symbol to a target term in `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    source: Signature,
    target: Signature,
    images: Vec<Term>,
}

impl Translation {
    pub fn new(source: Signature, target: Signature, images: Vec<Term>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Invalid(format!(
                "translation gives {} images for {} source symbols",
                images.len(),
                source.len()
            )));
        }
        for (sym, img) in images.iter().enumerate() {
            img.check(&target)?;
            let n = source.arity(sym) as u32;
            if let Some(v) = img.vars().into_iter().find(|&v| v == 0 || v > n) {
                return Err(Error::Invalid(format!(
                    "image of `{}` uses x{v}, outside x1..x{n}",
                    source.name(sym)
                )));
            }
        }
        Ok(Translation {
            source,
            target,
            images,
        })
    }

    pub fn identity(sig: &Signature) -> Self {
        let images = (0..sig.len())
            .map(|s| Term::App(s, (1..=sig.arity(s) as u32).map(Term::Var).collect()))
            .collect();
        Translation {
            source: sig.clone(),
            target: sig.clone(),
            images,
        }
    }

    /// Sends each source symbol to the target symbol with the same name.
    pub fn by_name(source: &Signature, target: &Signature) -> Result<Self> {
        let images = source
            .symbols()
            .iter()
            .map(|s| {
                let args = (1..=s.arity as u32).map(Term::Var).collect();
                Term::apply(target, &s.name, args)
            })
            .collect::<Result<Vec<_>>>()?;
        Translation::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn image(&self, sym: usize) -> &Term {
        &self.images[sym]
    }

    pub fn images(&self) -> &[Term] {
        &self.images
    }

    pub fn translate(&self, t: &Term) -> Result<Term> {
        match t {
            Term::Var(i) => Ok(Term::Var(*i)),
            Term::App(f, args) => {
                if *f >= self.source.len() {
                    return Err(Error::UnknownSymbol(format!("#{f}")));
                }
                if args.len() != self.source.arity(*f) {
                    return Err(Error::ArityMismatch {
                        name: self.source.name(*f).to_string(),
                        expected: self.source.arity(*f),
                        found: args.len(),
                    });
                }
                let args = args
                    .iter()
                    .map(|a| self.translate(a))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.images[*f].substitute(&Substitution::positional(&args)))
            }
        }
    }

    /// The translation `then ∘ self`, from `self.source` to `then.target`.
    pub fn compose(&self, then: &Translation) -> Result<Translation> {
        if self.target != then.source {
            return Err(Error::SignatureMismatch(
                "composed translations do not share the middle signature".into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|t| then.translate(t))
            .collect::<Result<Vec<_>>>()?;
        Translation::new(self.source.clone(), then.target.clone(), images)
    }
}

pub fn translate_term(tr: &Translation, t: &Term) -> Result<Term> {
    tr.translate(t)
}
