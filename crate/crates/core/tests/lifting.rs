//! Right lifting properties on a seeded corpus of small cyclic sets.

mod common;

use common::{check_instance, lifting_corpus, pool, to_point, verify_verdict, CORPUS_SIZE, TRUNCATION};
use cyclic_core::lifting::{is_acyclic_fibration_up_to, is_fibration_up_to};
use cyclic_core::presheaf::{cyclic_nerve, Arrow, FinCyclicSet, FinPresheaf};
use cyclic_core::reedy::{cset_acyclic_generators, cset_generators};

#[test]
fn seeded_corpus_passes_all_checks() {
    let corpus = lifting_corpus();
    assert_eq!(corpus.len(), CORPUS_SIZE);
    for inst in &corpus {
        if let Err(e) = check_instance(inst) {
            panic!("{}: {e}", inst.label);
        }
    }
}

#[test]
fn corpus_is_reproducible() {
    let a = lifting_corpus();
    let b = lifting_corpus();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.label, y.label);
        assert_eq!(x.p, y.p);
        assert_eq!(x.i, y.i);
    }
}

#[test]
fn corpus_has_both_verdicts() {
    let corpus = lifting_corpus();
    let verdicts: Vec<bool> = corpus.iter().map(|inst| verify_verdict(&inst.i, &inst.p).unwrap()).collect();
    assert!(verdicts.contains(&true));
    assert!(verdicts.contains(&false));
}

#[test]
fn empty_target_lifts_vacuously() {
    let empty = FinCyclicSet::empty(TRUNCATION);
    let p = Arrow::identity(empty);
    let i = cset_generators(0, TRUNCATION).unwrap();
    // No square exists since Λ[0] has no map to ∅.
    assert!(verify_verdict(&i, &p).unwrap());
}

#[test]
fn fibration_verdicts_shrink_with_degree() {
    for (name, x) in pool() {
        let p = to_point(&x);
        let low = is_acyclic_fibration_up_to(&p, 0).unwrap().holds;
        let high = is_acyclic_fibration_up_to(&p, 1).unwrap().holds;
        assert!(low || !high, "{name}: passing at degree 1 but failing at 0");
        let fib = is_fibration_up_to(&p, 1).unwrap();
        if high {
            assert!(fib.holds, "{name}: acyclic fibration that is not a fibration");
        }
    }
}

#[test]
fn identity_is_an_acyclic_fibration() {
    let x = cyclic_nerve(&common::z_mod(2), 3).unwrap();
    let verdict = is_acyclic_fibration_up_to(&Arrow::identity(x), 2).unwrap();
    assert!(verdict.holds);
    assert_eq!(verdict.generators_checked, 3);
}

#[test]
fn horn_inclusions_are_monos() {
    for n in 1..=2 {
        for k in 0..=n {
            assert!(cset_acyclic_generators(n, k, 3).unwrap().is_levelwise_injective());
        }
    }
}
