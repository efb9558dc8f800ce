mod common;

use aalkit_core::algebra::reduct_matrix;
use aalkit_core::casebook::{build_a_alpha_kappa, kappa_delta, kappa_logic, or_logic, signature_a_kappa};
use aalkit_core::interp::{
    check_composition, check_interpretation, search_interpretation, witness_matrix,
    InterpretationCertificate, InterpretationMode,
};
use aalkit_core::logic::{check_equivalential, consequence, enumerate_filters, in_mod_eq, is_filter, transfer_delta};
use aalkit_core::{LogicPresentation, Matrix, Term, Translation};
use common::*;
use proptest::prelude::*;
use std::sync::OnceLock;

struct Fixture {
    or: LogicPresentation,
    kappa: LogicPresentation,
    cert: InterpretationCertificate,
}

/// `or` into `kappa3`, found by search and re-certified against every submatrix.
fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let or = or_logic();
        let kappa = kappa_logic(3).unwrap();
        let found = search_interpretation(&or, &kappa, 1, InterpretationMode::Generators, None)
            .unwrap()
            .found
            .expect("an interpretation at depth one");
        let delta = kappa_delta(3);
        let cert = check_interpretation(
            &found.translation,
            &or,
            &kappa,
            InterpretationMode::Equivalential,
            Some(&delta),
        )
        .unwrap();
        Fixture { or, kappa, cert }
    })
}

#[test]
fn certificate_verifies_and_composes() {
    let fx = fixture();
    assert!(fx.cert.holds);
    assert!(!fx.cert.generator_relative());
    assert!(fx.cert.verify(&fx.or, &fx.kappa).unwrap());
    let id = check_interpretation(
        &Translation::identity(fx.or.signature()),
        &fx.or,
        &fx.or,
        InterpretationMode::Generators,
        None,
    )
    .unwrap();
    assert!(id.holds);
    let composite = check_composition(&id, &fx.cert, [&fx.or, &fx.or, &fx.kappa]).unwrap();
    assert!(composite.holds);
    assert_eq!(composite.translation, fx.cert.translation);
}

#[test]
fn filters_pull_back_along_the_translation() {
    let fx = fixture();
    for alpha in 0..3 {
        let alg = build_a_alpha_kappa(alpha, 3).unwrap();
        for g in enumerate_filters(&fx.kappa, &alg).unwrap() {
            let m = reduct_matrix(&fx.cert.translation, &Matrix::new(alg.clone(), g).unwrap()).unwrap();
            assert!(is_filter(&fx.or, &m).unwrap());
        }
    }
}

#[test]
fn swapping_implications_is_an_interpretation_that_carries_delta() {
    let sig = signature_a_kappa(3);
    let (i0, i1) = (sig.lookup("imp0").unwrap(), sig.lookup("imp1").unwrap());
    let images = (0..sig.len())
        .map(|s| {
            let target = if s == i0 { i1 } else if s == i1 { i0 } else { s };
            Term::App(target, (1..=sig.arity(s) as u32).map(Term::Var).collect())
        })
        .collect();
    let swap = Translation::new(sig.clone(), sig, images).unwrap();
    let kappa = &fixture().kappa;
    let delta = kappa_delta(3);
    let moved = transfer_delta(&swap, &delta).unwrap();
    assert_ne!(moved, delta);
    assert!(check_equivalential(kappa, &moved).unwrap());
    let cert = check_interpretation(&swap, kappa, kappa, InterpretationMode::Equivalential, Some(&moved)).unwrap();
    assert!(cert.holds);
}

#[test]
fn a_failed_check_names_a_matrix_outside_the_model_class() {
    let fx = fixture();
    let kappa = &fx.kappa;
    // Every `or` symbol sent to `one` collapses the source to a single truth value.
    let one = kappa.signature().lookup("one").unwrap();
    let images = (0..fx.or.signature().len())
        .map(|_| Term::App(one, vec![Term::Var(1)]))
        .collect();
    let tr = Translation::new(fx.or.signature().clone(), kappa.signature().clone(), images).unwrap();
    let cert = check_interpretation(&tr, &fx.or, kappa, InterpretationMode::Generators, None).unwrap();
    assert!(!cert.holds);
    let m = witness_matrix(&cert, kappa).unwrap().expect("a failing matrix");
    assert!(!in_mod_eq(&fx.or, &m).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn valid_rules_translate_to_valid_rules(seed in seeds()) {
        let fx = fixture();
        let mut rng = rng(seed);
        let sig = fx.or.signature();
        let premises: Vec<Term> = (0..(seed % 3) as usize).map(|_| random_term(&mut rng, sig, 2, 3)).collect();
        let conclusion = random_term(&mut rng, sig, 2, 3);
        if consequence(&fx.or, &premises, &conclusion).unwrap() {
            let tr = &fx.cert.translation;
            let premises: Vec<Term> = premises.iter().map(|p| tr.translate(p).unwrap()).collect();
            prop_assert!(consequence(&fx.kappa, &premises, &tr.translate(&conclusion).unwrap()).unwrap());
        }
    }
}
