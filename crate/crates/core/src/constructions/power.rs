use crate::algebra::{find_isomorphism, matrix_power_oracle, Descriptor, FiniteAlgebra, Matrix};
use crate::error::Result;
use crate::subset::Subset;
use crate::syntax::Term;

/// Descriptors for `A^[2]`: each basic operation applied coordinatewise, the
/// coordinate swap, and the first-coordinate diagonal.
pub fn default_power_snapshot(alg: &FiniteAlgebra) -> Vec<(String, Descriptor)> {
    let sig = alg.signature();
    let mut out: Vec<(String, Descriptor)> = (0..sig.len())
        .map(|f| {
            let k = sig.arity(f) as u32;
            let comp = |i: u32| Term::App(f, (0..k).map(|j| Term::Var(2 * j + i)).collect());
            (
                sig.name(f).to_string(),
                Descriptor {
                    arity: k as usize,
                    components: vec![comp(1), comp(2)],
                },
            )
        })
        .collect();
    out.push((
        "swap".into(),
        Descriptor {
            arity: 1,
            components: vec![Term::Var(2), Term::Var(1)],
        },
    ));
    out.push((
        "diag".into(),
        Descriptor {
            arity: 1,
            components: vec![Term::Var(1), Term::Var(1)],
        },
    ));
    out
}

/// `<A^[2], {<a, a>}>` over the given descriptor snapshot.
pub fn diagonal_power_matrix(alg: &FiniteAlgebra, snapshot: &[(String, Descriptor)]) -> Result<Matrix> {
    let power = matrix_power_oracle(alg, 2)?;
    let materialized = power.materialize(snapshot)?;
    let n = alg.size();
    Matrix::new(materialized, Subset::from_elems(n * n, (0..n).map(|a| a * n + a)))
}

/// Index of a candidate algebra whose diagonal power matrix is isomorphic to `m`.
/// Membership is relative to the candidates and to the snapshot.
pub fn power_class_witness(
    m: &Matrix,
    candidates: &[FiniteAlgebra],
    snapshot: impl Fn(&FiniteAlgebra) -> Vec<(String, Descriptor)>,
) -> Result<Option<usize>> {
    for (i, alg) in candidates.iter().enumerate() {
        if alg.size() * alg.size() != m.size() {
            continue;
        }
        let candidate = diagonal_power_matrix(alg, &snapshot(alg))?;
        if candidate.signature() == m.signature() && find_isomorphism(&candidate, m).is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
