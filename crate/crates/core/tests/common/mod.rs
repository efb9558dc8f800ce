#![allow(dead_code)]

use aalkit_core::algebra::for_each_tuple;
use aalkit_core::{Elem, FiniteAlgebra, Matrix, Signature, Subset, Term};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Up to three symbols of arity one or two.
pub fn random_signature(rng: &mut StdRng) -> Signature {
    Signature::new((0..rng.gen_range(1..=3)).map(|i| (format!("f{i}"), rng.gen_range(1..=2)))).unwrap()
}

pub fn random_algebra(rng: &mut StdRng, sig: &Signature, max_size: usize) -> FiniteAlgebra {
    let n: usize = rng.gen_range(1..=max_size);
    let tables = (0..sig.len())
        .map(|f| (0..n.pow(sig.arity(f) as u32)).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    FiniteAlgebra::new(sig.clone(), n, tables).unwrap()
}

pub fn random_subset(rng: &mut StdRng, n: usize) -> Subset {
    Subset::from_elems(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

pub fn random_matrix(rng: &mut StdRng, max_size: usize) -> Matrix {
    let sig = random_signature(rng);
    let alg = random_algebra(rng, &sig, max_size);
    let f = random_subset(rng, alg.size());
    Matrix::new(alg, f).unwrap()
}

pub fn random_term(rng: &mut StdRng, sig: &Signature, vars: u32, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.25) {
        return Term::Var(rng.gen_range(1..=vars));
    }
    let f = rng.gen_range(0..sig.len());
    Term::App(f, (0..sig.arity(f)).map(|_| random_term(rng, sig, vars, depth - 1)).collect())
}

/// The coarsest partition (as block labels) that is a congruence and does not
/// split the designated set from its complement, over all partitions.
pub fn brute_leibniz(m: &Matrix) -> Vec<usize> {
    let n = m.size();
    let alg = m.algebra();
    let mut best: Option<Vec<usize>> = None;
    let mut labels = Vec::with_capacity(n);
    fn go(labels: &mut Vec<usize>, n: usize, next: usize, visit: &mut dyn FnMut(&[usize])) {
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
    go(&mut labels, n, 0, &mut |l| {
        let respects_f = (0..n).all(|a| (0..n).all(|b| l[a] != l[b] || m.is_designated(a) == m.is_designated(b)));
        let blocks = l.iter().max().map_or(0, |&x| x + 1);
        if respects_f
            && best.as_ref().is_none_or(|b: &Vec<usize>| blocks < b.iter().max().unwrap() + 1)
            && compatible(alg, l)
        {
            best = Some(l.to_vec());
        }
    });
    best.unwrap()
}

fn compatible(alg: &FiniteAlgebra, l: &[usize]) -> bool {
    let n = alg.size();
    let mut ok = true;
    for f in 0..alg.signature().len() {
        for_each_tuple(n, alg.signature().arity(f), |args| {
            for pos in 0..args.len() {
                for b in (0..n).filter(|&b| l[b] == l[args[pos]]) {
                    let mut other = args.to_vec();
                    other[pos] = b;
                    ok &= l[alg.apply(f, args)] == l[alg.apply(f, &other)];
                }
            }
        });
    }
    ok
}

pub fn elems(s: &Subset) -> Vec<Elem> {
    s.to_vec()
}

pub fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}
