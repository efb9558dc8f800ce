use crate::algebra::{generated_subalgebra, is_homomorphism, submatrix, Elem, Matrix};
use crate::congruence::{leibniz_congruence, reduce, Partition};
use crate::constructions::{non_indexed_product, ProductMatrix};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Whether `embedding` is an injective matrix homomorphism `m -> product` that
/// reflects the designated set and has surjective projections.
pub fn is_subdirect(m: &Matrix, product: &ProductMatrix, embedding: &[Elem]) -> bool {
    let target = &product.matrix;
    if embedding.len() != m.size() || !is_homomorphism(m.algebra(), target.algebra(), embedding) {
        return false;
    }
    let mut seen = Subset::empty(target.size());
    for &v in embedding {
        if !seen.insert(v) {
            return false;
        }
    }
    if (0..m.size()).any(|a| m.is_designated(a) != target.is_designated(embedding[a])) {
        return false;
    }
    product.factor_sizes.iter().enumerate().all(|(i, &n)| {
        let hit = Subset::from_elems(n, embedding.iter().map(|&v| product.coordinates(v)[i]));
        hit.is_full()
    })
}

/// The submatrix generated by `seed`, with its inclusion map into the product.
pub fn generated_submatrix(product: &ProductMatrix, seed: &Subset) -> Result<(Matrix, Vec<Elem>)> {
    let closed = generated_subalgebra(product.matrix.algebra(), seed);
    if closed.is_empty() {
        return Err(Error::Invalid("the generated subuniverse is empty".into()));
    }
    let m = submatrix(&product.matrix, &closed)?;
    Ok((m, closed.to_vec()))
}

/// The embedding `<A, F>* -> ⊗ <A_i, F_i>*` given by `a/Ω ↦ <a(i)/Ω_i>`, for a
/// submatrix of `⊗ factors` included by `embedding`.
pub struct ReducedEmbedding {
    pub reduced: Matrix,
    pub product: ProductMatrix,
    pub map: Vec<Elem>,
}

pub fn reduced_embedding(
    m: &Matrix,
    embedding: &[Elem],
    product: &ProductMatrix,
    factors: &[Matrix],
) -> Result<ReducedEmbedding> {
    let omega = leibniz_congruence(m);
    let factor_omegas: Vec<Partition> = factors.iter().map(leibniz_congruence).collect();
    let reduced_factors: Vec<Matrix> = factors.iter().map(reduce).collect();
    let reduced_product = non_indexed_product(&reduced_factors, &product.snapshot)?;
    let reps = omega.representatives();
    let map = reps
        .iter()
        .map(|&a| {
            let coords: Vec<Elem> = product
                .coordinates(embedding[a])
                .iter()
                .zip(&factor_omegas)
                .map(|(&c, p)| p.block_of(c))
                .collect();
            reduced_product.element(&coords)
        })
        .collect();
    Ok(ReducedEmbedding {
        reduced: reduce(m),
        product: reduced_product,
        map,
    })
}
