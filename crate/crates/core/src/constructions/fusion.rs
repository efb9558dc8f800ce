use crate::algebra::{FiniteAlgebra, Matrix};
use crate::congruence::is_reduced;
use crate::error::{Error, Result};
use crate::logic::{in_mod_eq, LogicPresentation};
use crate::syntax::Signature;

/// Disjoint union of signatures; symbol `f` of part `i` is named `<tag_i>.f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusedSignature {
    pub signature: Signature,
    pub tags: Vec<String>,
    pub parts: Vec<Signature>,
    /// `(part, symbol)` for every fused symbol.
    pub origin: Vec<(usize, usize)>,
}

pub fn fuse_signatures(parts: &[(String, Signature)]) -> Result<FusedSignature> {
    let mut names = Vec::new();
    let mut origin = Vec::new();
    for (i, (tag, sig)) in parts.iter().enumerate() {
        for s in 0..sig.len() {
            names.push((format!("{tag}.{}", sig.name(s)), sig.arity(s)));
            origin.push((i, s));
        }
    }
    Ok(FusedSignature {
        signature: Signature::new(names)?,
        tags: parts.iter().map(|(t, _)| t.clone()).collect(),
        parts: parts.iter().map(|(_, s)| s.clone()).collect(),
        origin,
    })
}

/// A matrix over a fused signature.
#[derive(Clone, Debug)]
pub struct FusedMatrix {
    pub matrix: Matrix,
    pub signature: FusedSignature,
}

impl FusedMatrix {
    /// The reduct to part `i`, over that part's own signature.
    pub fn reduct(&self, i: usize) -> Result<Matrix> {
        let alg = self.matrix.algebra();
        let tables = self
            .signature
            .origin
            .iter()
            .enumerate()
            .filter(|(_, (part, _))| *part == i)
            .map(|(fused, _)| alg.table(fused).to_vec())
            .collect();
        let sig = self
            .signature
            .parts
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("no part {i}")))?;
        let mut reduct = FiniteAlgebra::new(sig.clone(), alg.size(), tables)?;
        if let Some(l) = alg.labels() {
            reduct = reduct.with_labels(l.to_vec())?;
        }
        Matrix::new(reduct, self.matrix.designated().clone())
    }
}

/// Combines matrices sharing a universe and designated set into one matrix
/// carrying all their operations under tagged names.
pub fn fuse_tagged(parts: &[(String, Matrix)]) -> Result<FusedMatrix> {
    let Some((_, first)) = parts.first() else {
        return Err(Error::Invalid("nothing to fuse".into()));
    };
    for (tag, m) in parts {
        if m.size() != first.size() || m.designated() != first.designated() {
            return Err(Error::Invalid(format!(
                "part `{tag}` does not share the universe and designated set"
            )));
        }
    }
    let fused = fuse_signatures(
        &parts
            .iter()
            .map(|(t, m)| (t.clone(), m.signature().clone()))
            .collect::<Vec<_>>(),
    )?;
    let tables = fused
        .origin
        .iter()
        .map(|&(i, s)| parts[i].1.algebra().table(s).to_vec())
        .collect();
    let mut alg = FiniteAlgebra::new(fused.signature.clone(), first.size(), tables)?;
    if let Some(l) = first.algebra().labels() {
        alg = alg.with_labels(l.to_vec())?;
    }
    Ok(FusedMatrix {
        matrix: Matrix::new(alg, first.designated().clone())?,
        signature: fused,
    })
}

/// Binary fusion with tags `l1` and `l2`.
pub fn fuse(m1: &Matrix, m2: &Matrix) -> Result<FusedMatrix> {
    fuse_tagged(&[("l1".into(), m1.clone()), ("l2".into(), m2.clone())])
}

/// Membership in the model class of the fusion of equivalential logics: every
/// reduct is a reduced model of its logic (for a reduced model this is the same
/// as having identity Suszko congruence).
pub fn in_fusion_class(fm: &FusedMatrix, logics: &[LogicPresentation]) -> Result<bool> {
    if logics.len() != fm.signature.parts.len() {
        return Err(Error::Invalid("one logic per fused part is required".into()));
    }
    for (i, logic) in logics.iter().enumerate() {
        let r = fm.reduct(i)?;
        if !is_reduced(&r) || !in_mod_eq(logic, &r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::LogicPresentation;

    fn parts() -> (Matrix, Matrix) {
        let neg = Signature::new([("neg", 1)]).unwrap();
        let m1 = Matrix::from_elems(FiniteAlgebra::new(neg, 2, vec![vec![1, 0]]).unwrap(), [1]).unwrap();
        let join = Signature::new([("join", 2)]).unwrap();
        let alg = FiniteAlgebra::from_fn(join, 2, |_, a| a[0].max(a[1])).unwrap();
        (m1, Matrix::from_elems(alg, [1]).unwrap())
    }

    #[test]
    fn reducts_recover_the_inputs() {
        let (m1, m2) = parts();
        let f = fuse(&m1, &m2).unwrap();
        assert_eq!(f.signature.signature.name(0), "l1.neg");
        assert_eq!(f.signature.signature.name(1), "l2.join");
        assert_eq!(f.reduct(0).unwrap().algebra().tables(), m1.algebra().tables());
        assert_eq!(f.reduct(1).unwrap().algebra().tables(), m2.algebra().tables());
    }

    #[test]
    fn mismatched_designated_sets_are_rejected() {
        let (m1, m2) = parts();
        let m2 = m2.with_designated(crate::subset::Subset::full(2)).unwrap();
        assert!(fuse(&m1, &m2).is_err());
    }

    #[test]
    fn membership_uses_each_reduct() {
        let (m1, m2) = parts();
        let l1 = LogicPresentation::from_matrices("neg", m1.signature().clone(), vec![m1.clone()]).unwrap();
        let l2 = LogicPresentation::from_matrices("join", m2.signature().clone(), vec![m2.clone()]).unwrap();
        let f = fuse(&m1, &m2).unwrap();
        assert!(in_fusion_class(&f, &[l1, l2]).unwrap());
    }
}
