use crate::algebra::{coordinates, from_coordinates, Descriptor, Elem, Matrix, VirtualAlgebra};
use crate::error::{Error, Result};
use crate::logic::{CongruenceFormulaSet, LogicPresentation};
use crate::subset::Subset;
use crate::syntax::{Signature, Term, Translation};

/// A basic operation of a non-indexed product: one `n`-ary term per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSymbol {
    pub name: String,
    pub descriptor: Descriptor,
}

impl ProductSymbol {
    pub fn new(name: impl Into<String>, arity: usize, components: Vec<Term>) -> Self {
        ProductSymbol {
            name: name.into(),
            descriptor: Descriptor { arity, components },
        }
    }

    pub fn arity(&self) -> usize {
        self.descriptor.arity
    }

    pub fn components(&self) -> &[Term] {
        &self.descriptor.components
    }
}

/// Checks a snapshot against the factor signatures.
pub fn check_snapshot(factor_sigs: &[Signature], snapshot: &[ProductSymbol]) -> Result<()> {
    if factor_sigs.is_empty() {
        return Err(Error::Invalid("a non-indexed product needs at least one factor".into()));
    }
    if snapshot.is_empty() {
        return Err(Error::Invalid("the product snapshot is empty".into()));
    }
    for s in snapshot {
        if s.components().len() != factor_sigs.len() {
            return Err(Error::ArityMismatch {
                name: s.name.clone(),
                expected: factor_sigs.len(),
                found: s.components().len(),
            });
        }
        for (t, sig) in s.components().iter().zip(factor_sigs) {
            t.check(sig)?;
            if let Some(v) = t.vars().into_iter().find(|&v| v == 0 || v as usize > s.arity()) {
                return Err(Error::Invalid(format!(
                    "component of `{}` uses x{v} beyond its arity {}",
                    s.name,
                    s.arity()
                )));
            }
        }
    }
    Ok(())
}

pub fn snapshot_signature(snapshot: &[ProductSymbol]) -> Result<Signature> {
    Signature::new(snapshot.iter().map(|s| (s.name.clone(), s.arity())))
}

/// For each factor `j` and each `k`-ary symbol `f` of it, the `(k+1)`-ary symbol with
/// `f(x1..xk)` in slot `j` and `x<k+1>` in every other slot. With `deltas`, also one
/// binary symbol per choice of one formula from each `Δ_i`.
pub fn default_snapshot(
    factor_sigs: &[Signature],
    deltas: Option<&[CongruenceFormulaSet]>,
) -> Result<Vec<ProductSymbol>> {
    let mut out = Vec::new();
    for (j, sig) in factor_sigs.iter().enumerate() {
        for f in 0..sig.len() {
            let k = sig.arity(f);
            let fresh = Term::Var(k as u32 + 1);
            let components = (0..factor_sigs.len())
                .map(|i| {
                    if i == j {
                        Term::App(f, (1..=k as u32).map(Term::Var).collect())
                    } else {
                        fresh.clone()
                    }
                })
                .collect();
            out.push(ProductSymbol::new(format!("s{j}.{}", sig.name(f)), k + 1, components));
        }
    }
    if let Some(deltas) = deltas {
        if deltas.len() != factor_sigs.len() {
            return Err(Error::Invalid("one congruence formula set per factor is required".into()));
        }
        let sizes: Vec<usize> = deltas.iter().map(|d| d.terms().len()).collect();
        let total: usize = sizes.iter().product();
        for idx in 0..total {
            let pick = coordinates(&sizes, idx);
            let components = pick
                .iter()
                .zip(deltas)
                .map(|(&p, d)| d.terms()[p].clone())
                .collect();
            let name = format!(
                "delta.{}",
                pick.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
            );
            out.push(ProductSymbol::new(name, 2, components));
        }
    }
    check_snapshot(factor_sigs, &out)?;
    Ok(out)
}

/// A materialized non-indexed product with its coordinate system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMatrix {
    pub matrix: Matrix,
    pub factor_sizes: Vec<usize>,
    pub snapshot: Vec<ProductSymbol>,
}

impl ProductMatrix {
    pub fn coordinates(&self, e: Elem) -> Vec<Elem> {
        coordinates(&self.factor_sizes, e)
    }

    pub fn element(&self, coords: &[Elem]) -> Elem {
        from_coordinates(&self.factor_sizes, coords)
    }
}

/// `⊗ ms` restricted to the operations listed in `snapshot`; designated set `∏ F_i`.
pub fn non_indexed_product(ms: &[Matrix], snapshot: &[ProductSymbol]) -> Result<ProductMatrix> {
    let sigs: Vec<Signature> = ms.iter().map(|m| m.signature().clone()).collect();
    check_snapshot(&sigs, snapshot)?;
    let virt = VirtualAlgebra::product(ms.iter().map(|m| m.algebra().clone()).collect())?;
    let named: Vec<(String, Descriptor)> = snapshot
        .iter()
        .map(|s| (s.name.clone(), s.descriptor.clone()))
        .collect();
    let alg = virt.materialize(&named)?;
    let sizes = virt.factor_sizes().to_vec();
    let designated = Subset::from_elems(
        alg.size(),
        (0..alg.size()).filter(|&e| {
            coordinates(&sizes, e)
                .iter()
                .zip(ms)
                .all(|(&c, m)| m.is_designated(c))
        }),
    );
    Ok(ProductMatrix {
        matrix: Matrix::new(alg, designated)?,
        factor_sizes: sizes,
        snapshot: snapshot.to_vec(),
    })
}

/// The product logic over the snapshot signature, induced by the products of
/// all combinations of factor generators.
pub fn product_logic(logics: &[LogicPresentation], snapshot: &[ProductSymbol]) -> Result<LogicPresentation> {
    let gens: Vec<&[Matrix]> = logics
        .iter()
        .map(|l| l.generators().ok_or_else(|| {
            Error::Unsupported(format!("`{}` needs a matrix presentation to form a product", l.name()))
        }))
        .collect::<Result<_>>()?;
    let sigs: Vec<Signature> = logics.iter().map(|l| l.signature().clone()).collect();
    check_snapshot(&sigs, snapshot)?;
    let counts: Vec<usize> = gens.iter().map(|g| g.len()).collect();
    let total: usize = counts.iter().product();
    let mut products = Vec::with_capacity(total);
    for idx in 0..total {
        let pick = coordinates(&counts, idx);
        let factors: Vec<Matrix> = pick.iter().zip(&gens).map(|(&p, g)| g[p].clone()).collect();
        products.push(non_indexed_product(&factors, snapshot)?.matrix);
    }
    let name = logics.iter().map(|l| l.name()).collect::<Vec<_>>().join("*");
    LogicPresentation::from_matrices(name, snapshot_signature(snapshot)?, products)
}

/// The translation sending each product symbol to its `j`-th component.
pub fn projection_translation(
    snapshot: &[ProductSymbol],
    factor_sig: &Signature,
    j: usize,
) -> Result<Translation> {
    let images = snapshot
        .iter()
        .map(|s| {
            s.components()
                .get(j)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("no factor {j} in `{}`", s.name)))
        })
        .collect::<Result<Vec<_>>>()?;
    Translation::new(snapshot_signature(snapshot)?, factor_sig.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{reduct_by_translation, FiniteAlgebra};

    fn neg2() -> Matrix {
        let sig = Signature::new([("neg", 1)]).unwrap();
        let alg = FiniteAlgebra::new(sig, 2, vec![vec![1, 0]]).unwrap();
        Matrix::from_elems(alg, [1]).unwrap()
    }

    #[test]
    fn trivial_factors_give_trivial_product() {
        let one = Matrix::trivial(neg2().signature().clone());
        let sigs = vec![one.signature().clone(); 2];
        let snap = default_snapshot(&sigs, None).unwrap();
        let p = non_indexed_product(&[one.clone(), one], &snap).unwrap();
        assert_eq!(p.matrix.size(), 1);
        assert!(p.matrix.designated().is_full());
    }

    #[test]
    fn binary_negation_product() {
        let m = neg2();
        let sigs = vec![m.signature().clone(); 2];
        let snap = vec![ProductSymbol::new(
            "nn",
            1,
            vec![Term::App(0, vec![Term::Var(1)]), Term::App(0, vec![Term::Var(1)])],
        )];
        let p = non_indexed_product(&[m.clone(), m.clone()], &snap).unwrap();
        assert_eq!(p.matrix.size(), 4);
        assert_eq!(p.matrix.designated().to_vec(), vec![p.element(&[1, 1])]);
        assert_eq!(p.matrix.algebra().apply(0, &[p.element(&[0, 1])]), p.element(&[1, 0]));
        assert!(default_snapshot(&sigs, None).unwrap().len() == 2);
    }

    #[test]
    fn projection_recovers_a_factor() {
        let m = neg2();
        let sigs = vec![m.signature().clone(); 2];
        let snap = default_snapshot(&sigs, None).unwrap();
        let tr = projection_translation(&snap, &sigs[1], 1).unwrap();
        let reduct = reduct_by_translation(&tr, m.algebra()).unwrap();
        // s0.neg(x1, x2) projects to x2 in slot 1; s1.neg(x1, x2) projects to neg(x1).
        assert_eq!(reduct.table(0), &[0, 1, 0, 1]);
        assert_eq!(reduct.table(1), &[1, 1, 0, 0]);
    }
}
