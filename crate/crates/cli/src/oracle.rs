//! Seeded self-check of the Leibniz kernel against exhaustive search.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use aalkit_core::congruence::{is_congruence, leibniz_congruence};
use aalkit_core::{FiniteAlgebra, Matrix, Partition, Signature, Subset};

use crate::output::Outcome;

fn random_matrix(rng: &mut StdRng) -> Matrix {
    let n: usize = rng.gen_range(1..=4);
    let sig = Signature::new((0..rng.gen_range(1..=3)).map(|i| (format!("f{i}"), rng.gen_range(1..=2)))).unwrap();
    let tables = (0..sig.len())
        .map(|f| (0..n.pow(sig.arity(f) as u32)).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let alg = FiniteAlgebra::new(sig, n, tables).expect("tables in range");
    let f = Subset::from_elems(n, (0..n).filter(|_| rng.gen_bool(0.5)));
    Matrix::new(alg, f).expect("subset in range")
}

/// Calls `visit` on every partition of `0..n` as a restricted growth string.
fn for_each_partition(n: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(labels: &mut Vec<usize>, n: usize, next: usize, visit: &mut impl FnMut(&[usize])) {
        if labels.len() == n {
            visit(labels);
            return;
        }
        for l in 0..=next {
            labels.push(l);
            go(labels, n, next.max(l + 1), visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, visit);
}

/// The coarsest congruence compatible with the designated set, by exhaustion.
fn brute_force_leibniz(m: &Matrix) -> Partition {
    let mut best: Option<Partition> = None;
    for_each_partition(m.size(), &mut |labels| {
        let p = Partition::from_labels(labels);
        let compatible = (0..m.size()).all(|a| (0..m.size()).all(|b| !p.relates(a, b) || m.is_designated(a) == m.is_designated(b)));
        if compatible && is_congruence(m.algebra(), &p) && best.as_ref().is_none_or(|q| p.num_blocks() < q.num_blocks()) {
            best = Some(p);
        }
    });
    best.expect("the identity always qualifies")
}

pub fn oracle_check(seed: u64, count: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut first_failure = None;
    for i in 0..count {
        let m = random_matrix(&mut rng);
        if leibniz_congruence(&m) != brute_force_leibniz(&m) {
            first_failure = Some((i, m));
            break;
        }
    }
    let query = json!({"command": "oracle-check", "seed": seed, "count": count});
    match first_failure {
        None => Outcome::new(query, json!(true), format!("leibniz agrees with brute force on {count} random matrices")),
        Some((i, m)) => Outcome::new(query, json!(false), format!("disagreement on random matrix #{i}"))
            .witness(json!({"index": i, "matrix": m.to_json()}))
            .holds(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                let mut c = 0;
                for_each_partition(n, &mut |_| c += 1);
                c
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52]);
    }
}
