mod common;

use std::collections::BTreeMap;

use aalkit_core::algebra::{
    evaluate, for_each_tuple, generated_subalgebra, is_homomorphism, matrix_power_oracle, quotient,
    reduct_by_translation, Descriptor,
};
use aalkit_core::congruence::leibniz_congruence;
use aalkit_core::syntax::translate_term;
use aalkit_core::{Subset, Term, Translation};
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn evaluation_through_a_reduct(seed in seeds()) {
        let mut rng = rng(seed);
        let src = random_signature(&mut rng);
        let tgt = random_signature(&mut rng);
        let images = (0..src.len()).map(|f| random_term(&mut rng, &tgt, src.arity(f) as u32, 2)).collect();
        let tr = Translation::new(src.clone(), tgt.clone(), images).unwrap();
        let alg = random_algebra(&mut rng, &tgt, 4);
        let reduct = reduct_by_translation(&tr, &alg).unwrap();
        let phi = random_term(&mut rng, &src, 3, 4);
        let env: BTreeMap<u32, usize> = (1..=3).map(|v| (v, rand::Rng::gen_range(&mut rng, 0..alg.size()))).collect();
        prop_assert_eq!(
            evaluate(&alg, &translate_term(&tr, &phi).unwrap(), &env).unwrap(),
            evaluate(&reduct, &phi, &env).unwrap()
        );
    }

    #[test]
    fn subalgebra_generation_is_a_closure_operator(seed in seeds()) {
        let mut rng = rng(seed);
        let sig = random_signature(&mut rng);
        let alg = random_algebra(&mut rng, &sig, 6);
        let small = random_subset(&mut rng, alg.size());
        let large = small.union(&random_subset(&mut rng, alg.size()));
        let (gs, gl) = (generated_subalgebra(&alg, &small), generated_subalgebra(&alg, &large));
        prop_assert!(small.is_subset(&gs));
        prop_assert!(gs.is_subset(&gl));
        prop_assert_eq!(generated_subalgebra(&alg, &gs), gs);
    }

    #[test]
    fn natural_map_onto_a_quotient(seed in seeds()) {
        let mut rng = rng(seed);
        let m = random_matrix(&mut rng, 5);
        let p = leibniz_congruence(&m);
        let q = quotient(&m, &p).unwrap();
        let map: Vec<usize> = (0..m.size()).map(|e| p.block_of(e)).collect();
        prop_assert!(is_homomorphism(m.algebra(), q.algebra(), &map));
        prop_assert!((0..q.size()).all(|b| map.contains(&b)));
        prop_assert!((0..m.size()).all(|e| m.is_designated(e) == q.is_designated(map[e])));
    }
}

#[test]
fn projection_descriptors_project() {
    let mut rng = rng(5);
    for _ in 0..20 {
        let sig = random_signature(&mut rng);
        let alg = random_algebra(&mut rng, &sig, 4);
        for n in 1..=2usize {
            let power = matrix_power_oracle(&alg, n).unwrap();
            let k = 2;
            let named: Vec<(String, Descriptor)> = (0..k)
                .map(|p| {
                    let components = (1..=n as u32).map(|i| Term::Var(n as u32 * p as u32 + i)).collect();
                    (format!("pi{p}"), Descriptor { arity: k, components })
                })
                .collect();
            let mat = power.materialize(&named).unwrap();
            for_each_tuple(mat.size(), k, |args| {
                for p in 0..k {
                    assert_eq!(mat.apply(p, args), args[p]);
                }
            });
        }
    }
}

#[test]
fn generated_subalgebra_of_empty_seed_without_constants() {
    let mut rng = rng(1);
    let sig = random_signature(&mut rng);
    let alg = random_algebra(&mut rng, &sig, 4);
    assert!(generated_subalgebra(&alg, &Subset::empty(alg.size())).is_empty());
}
