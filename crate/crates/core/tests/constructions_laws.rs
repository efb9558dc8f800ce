mod common;

use aalkit_core::algebra::for_each_tuple;
use aalkit_core::constructions::{default_snapshot, fuse, non_indexed_product};
use aalkit_core::{Matrix, Signature};
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fusion_reducts_recover_the_parts(seed in seeds()) {
        let mut rng = rng(seed);
        let m1 = random_matrix(&mut rng, 4);
        let sig2 = random_signature(&mut rng);
        let alg2 = loop {
            let a = random_algebra(&mut rng, &sig2, 4);
            if a.size() == m1.size() {
                break a;
            }
        };
        let m2 = Matrix::new(alg2, m1.designated().clone()).unwrap();
        let fm = fuse(&m1, &m2).unwrap();
        prop_assert_eq!(fm.matrix.signature().len(), m1.signature().len() + sig2.len());
        prop_assert_eq!(&fm.reduct(0).unwrap(), &m1);
        prop_assert_eq!(&fm.reduct(1).unwrap(), &m2);
    }

    #[test]
    fn product_operations_act_componentwise(seed in seeds()) {
        let mut rng = rng(seed);
        let factors: Vec<Matrix> = (0..2).map(|_| random_matrix(&mut rng, 3)).collect();
        let sigs: Vec<Signature> = factors.iter().map(|m| m.signature().clone()).collect();
        let snapshot = default_snapshot(&sigs, None).unwrap();
        let pm = non_indexed_product(&factors, &snapshot).unwrap();
        let alg = pm.matrix.algebra();
        prop_assert_eq!(alg.size(), factors[0].size() * factors[1].size());
        for e in 0..alg.size() {
            let c = pm.coordinates(e);
            prop_assert_eq!(pm.element(&c), e);
            prop_assert_eq!(
                pm.matrix.is_designated(e),
                factors.iter().zip(&c).all(|(m, &x)| m.is_designated(x))
            );
        }
        for (s, sym) in snapshot.iter().enumerate() {
            let mut ok = true;
            for_each_tuple(alg.size(), sym.arity(), |args| {
                let value = pm.coordinates(alg.apply(s, args));
                for (j, m) in factors.iter().enumerate() {
                    let mut env = vec![0; sym.arity() + 1];
                    for (i, &a) in args.iter().enumerate() {
                        env[i + 1] = pm.coordinates(a)[j];
                    }
                    ok &= m.algebra().eval(&sym.components()[j], &env).unwrap() == value[j];
                }
            });
            prop_assert!(ok, "symbol {} is not componentwise", sym.name);
        }
    }
}
