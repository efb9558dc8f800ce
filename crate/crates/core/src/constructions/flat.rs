use crate::algebra::{direct_product, Elem, Matrix};
use crate::constructions::{non_indexed_product, snapshot_signature, ProductMatrix, ProductSymbol};
use crate::error::{Error, Result};
use crate::syntax::Signature;

/// `<A, F>♭`: the product with `m` in `slot` and trivial matrices elsewhere.
pub fn flat(
    m: &Matrix,
    slot: usize,
    factor_sigs: &[Signature],
    snapshot: &[ProductSymbol],
) -> Result<ProductMatrix> {
    let Some(sig) = factor_sigs.get(slot) else {
        return Err(Error::Invalid(format!(
            "slot {slot} outside a family of {} factors",
            factor_sigs.len()
        )));
    };
    if m.signature() != sig {
        return Err(Error::SignatureMismatch(format!("matrix does not fit slot {slot}")));
    }
    let factors: Vec<Matrix> = factor_sigs
        .iter()
        .enumerate()
        .map(|(i, s)| if i == slot { m.clone() } else { Matrix::trivial(s.clone()) })
        .collect();
    non_indexed_product(&factors, snapshot)
}

/// The direct product `∏_i <A_i, F_i>♭` together with `⊗ <A_i, F_i>` and the map
/// `f(ā)(i) = ā(i)(i)` between them.
pub struct FlatDecomposition {
    pub flats_product: Matrix,
    pub product: ProductMatrix,
    pub map: Vec<Elem>,
}

pub fn flat_decomposition(factors: &[Matrix], snapshot: &[ProductSymbol]) -> Result<FlatDecomposition> {
    let sigs: Vec<Signature> = factors.iter().map(|m| m.signature().clone()).collect();
    let flats = factors
        .iter()
        .enumerate()
        .map(|(j, m)| flat(m, j, &sigs, snapshot))
        .collect::<Result<Vec<_>>>()?;
    let flat_sizes: Vec<usize> = flats.iter().map(|f| f.matrix.size()).collect();
    let flat_matrices: Vec<Matrix> = flats.iter().map(|f| f.matrix.clone()).collect();
    let flats_product = direct_product(&snapshot_signature(snapshot)?, &flat_matrices)?;
    let product = non_indexed_product(factors, snapshot)?;
    let map = (0..flats_product.size())
        .map(|e| {
            let outer = crate::algebra::coordinates(&flat_sizes, e);
            let diag: Vec<Elem> = outer
                .iter()
                .enumerate()
                .map(|(i, &x)| flats[i].coordinates(x)[i])
                .collect();
            product.element(&diag)
        })
        .collect();
    Ok(FlatDecomposition {
        flats_product,
        product,
        map,
    })
}
