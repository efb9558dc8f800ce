use std::collections::HashSet;

use crate::algebra::{for_each_tuple, Elem, FiniteAlgebra, Matrix};
use crate::congruence::{is_congruence, Partition};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::syntax::{Signature, Translation};

/// Least subset containing `seed` and closed under every operation.
pub fn generated_subalgebra(alg: &FiniteAlgebra, seed: &Subset) -> Subset {
    let mut closed = seed.clone();
    let mut members: Vec<Elem> = seed.to_vec();
    let mut next = 0;
    let mut args = Vec::new();
    while next < members.len() {
        let fresh = next;
        next += 1;
        for sym in 0..alg.signature().len() {
            let k = alg.signature().arity(sym);
            // Tuples over members[..=fresh] that use members[fresh] at position `pos`
            // and only older members before it.
            for pos in 0..k {
                let mut produced = Vec::new();
                for_each_tuple(fresh + 1, k - 1, |rest| {
                    if rest[..pos].contains(&fresh) {
                        return;
                    }
                    args.clear();
                    args.extend(rest[..pos].iter().map(|&r| members[r]));
                    args.push(members[fresh]);
                    args.extend(rest[pos..].iter().map(|&r| members[r]));
                    produced.push(alg.apply(sym, &args));
                });
                for v in produced {
                    if closed.insert(v) {
                        members.push(v);
                    }
                }
            }
        }
    }
    closed
}

pub fn is_closed(alg: &FiniteAlgebra, s: &Subset) -> bool {
    generated_subalgebra(alg, s) == *s
}

/// All non-empty subuniverses, ordered by cardinality and then members.
pub fn subuniverses(alg: &FiniteAlgebra) -> Vec<Subset> {
    let n = alg.size();
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut queue: Vec<Subset> = (0..n)
        .map(|e| generated_subalgebra(alg, &Subset::from_elems(n, [e])))
        .collect();
    while let Some(s) = queue.pop() {
        if !seen.insert(s.clone()) {
            continue;
        }
        for e in 0..n {
            if !s.contains(e) {
                let mut t = s.clone();
                t.insert(e);
                let t = generated_subalgebra(alg, &t);
                if !seen.contains(&t) {
                    queue.push(t);
                }
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_by_key(Subset::popcount_key);
    out
}

/// Mixed-radix coordinates of `e` in a product with the given factor sizes.
/// The first factor is the most significant digit.
pub fn coordinates(sizes: &[usize], mut e: Elem) -> Vec<Elem> {
    let mut out = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        out[i] = e % sizes[i];
        e /= sizes[i];
    }
    out
}

pub fn from_coordinates(sizes: &[usize], coords: &[Elem]) -> Elem {
    sizes
        .iter()
        .zip(coords)
        .fold(0, |acc, (&n, &c)| acc * n + c)
}

pub(crate) fn product_size(sizes: &[usize], cap: usize) -> Result<usize> {
    let mut size: usize = 1;
    for &n in sizes {
        size = size
            .checked_mul(n)
            .filter(|&s| s <= cap)
            .ok_or(Error::UniverseTooLarge { size: usize::MAX, cap })?;
    }
    Ok(size)
}

const PRODUCT_CAP: usize = 1 << 16;

/// Direct product of matrices over `signature`; the empty product is `<1, {1}>`.
pub fn direct_product(signature: &Signature, ms: &[Matrix]) -> Result<Matrix> {
    if let Some(m) = ms.iter().find(|m| m.signature() != signature) {
        return Err(Error::SignatureMismatch(format!(
            "factor over a signature with {} symbols",
            m.signature().len()
        )));
    }
    let sizes: Vec<usize> = ms.iter().map(Matrix::size).collect();
    let size = product_size(&sizes, PRODUCT_CAP)?;
    let alg = FiniteAlgebra::from_fn(signature.clone(), size, |sym, args| {
        let coords: Vec<Vec<Elem>> = args.iter().map(|&a| coordinates(&sizes, a)).collect();
        let out: Vec<Elem> = ms
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let local: Vec<Elem> = coords.iter().map(|c| c[i]).collect();
                m.algebra().apply(sym, &local)
            })
            .collect();
        from_coordinates(&sizes, &out)
    })?;
    let designated = (0..size).filter(|&e| {
        coordinates(&sizes, e)
            .iter()
            .zip(ms)
            .all(|(&c, m)| m.is_designated(c))
    });
    let designated = Subset::from_elems(size, designated);
    Matrix::new(alg, designated)
}

/// Quotient by a congruence. Block `i` of the canonical partition becomes element `i`.
pub fn quotient(m: &Matrix, p: &Partition) -> Result<Matrix> {
    let alg = m.algebra();
    if p.universe() != alg.size() || !is_congruence(alg, p) {
        return Err(Error::NotACongruence);
    }
    let reps = p.representatives();
    let q = FiniteAlgebra::from_fn(alg.signature().clone(), p.num_blocks(), |sym, args| {
        let lifted: Vec<Elem> = args.iter().map(|&b| reps[b]).collect();
        p.block_of(alg.apply(sym, &lifted))
    })?;
    let q = match alg.labels() {
        Some(l) => q.with_labels(reps.iter().map(|&r| l[r].clone()).collect())?,
        None => q,
    };
    let designated = Subset::from_elems(
        p.num_blocks(),
        m.designated().iter().map(|e| p.block_of(e)),
    );
    Matrix::new(q, designated)
}

/// Restriction to a closed subset; the members of `s` are renumbered in increasing order.
pub fn submatrix(m: &Matrix, s: &Subset) -> Result<Matrix> {
    let alg = m.algebra();
    if s.is_empty() || s.universe() != alg.size() || !is_closed(alg, s) {
        return Err(Error::NotClosed);
    }
    let members = s.to_vec();
    let mut index = vec![usize::MAX; alg.size()];
    for (i, &e) in members.iter().enumerate() {
        index[e] = i;
    }
    let sub = FiniteAlgebra::from_fn(alg.signature().clone(), members.len(), |sym, args| {
        let lifted: Vec<Elem> = args.iter().map(|&a| members[a]).collect();
        index[alg.apply(sym, &lifted)]
    })?;
    let sub = match alg.labels() {
        Some(l) => sub.with_labels(members.iter().map(|&e| l[e].clone()).collect())?,
        None => sub,
    };
    let designated = Subset::from_elems(
        members.len(),
        members
            .iter()
            .enumerate()
            .filter(|&(_, &e)| m.is_designated(e))
            .map(|(i, _)| i),
    );
    Matrix::new(sub, designated)
}

/// The source-signature algebra `A^τ` on the same universe.
pub fn reduct_by_translation(tr: &Translation, alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if alg.signature() != tr.target() {
        return Err(Error::SignatureMismatch(
            "algebra is not over the translation's target signature".into(),
        ));
    }
    let src = tr.source();
    let tables = (0..src.len())
        .map(|sym| alg.term_table(tr.image(sym), src.arity(sym)))
        .collect::<Result<Vec<_>>>()?;
    let reduct = FiniteAlgebra::new(src.clone(), alg.size(), tables)?;
    match alg.labels() {
        Some(l) => reduct.with_labels(l.to_vec()),
        None => Ok(reduct),
    }
}

pub fn reduct_matrix(tr: &Translation, m: &Matrix) -> Result<Matrix> {
    Matrix::new(reduct_by_translation(tr, m.algebra())?, m.designated().clone())
}
