//! Property tests for the algebraic invariants.

use cyclic_core::crossed::{compose_sym, enumerate_sym, SymMap};
use cyclic_core::delta::{compose_ordinal, decompose_generators, enumerate_monotone, recompose, OrdinalMap};
use cyclic_core::lambda::{
    canonical_factor, compose_cyclic, dual, enumerate_hom, from_canonical, iota, tau_power, underlying, CyclicMap,
};
use cyclic_core::presheaf::representable_cyclic;
use cyclic_core::reedy::{classify, reedy_factor};
use cyclic_core::segal::{catalan, enumerate_triangulations, Triangulation};
use proptest::prelude::*;

fn ordinal(n: usize, m: usize) -> impl Strategy<Value = OrdinalMap> {
    let all = enumerate_monotone(n, m).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn cyclic(n: usize, m: usize) -> impl Strategy<Value = CyclicMap> {
    let all = enumerate_hom(n, m).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn any_cyclic() -> impl Strategy<Value = CyclicMap> {
    (0usize..=4, 0usize..=4).prop_flat_map(|(n, m)| cyclic(n, m))
}

/// Three composable cyclic maps `h ∘ g ∘ f`.
fn cyclic_chain() -> impl Strategy<Value = (CyclicMap, CyclicMap, CyclicMap)> {
    (0usize..=3, 0usize..=3, 0usize..=3, 0usize..=3)
        .prop_flat_map(|(a, b, c, d)| (cyclic(a, b), cyclic(b, c), cyclic(c, d)))
}

fn sym(n: usize, m: usize) -> impl Strategy<Value = SymMap> {
    let all = enumerate_sym(n, m).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclic_composition_is_associative((f, g, h) in cyclic_chain()) {
        let left = compose_cyclic(&h, &compose_cyclic(&g, &f).unwrap()).unwrap();
        let right = compose_cyclic(&compose_cyclic(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_units(phi in any_cyclic()) {
        prop_assert_eq!(compose_cyclic(&phi, &CyclicMap::identity(phi.src())).unwrap(), phi.clone());
        prop_assert_eq!(compose_cyclic(&CyclicMap::identity(phi.tgt()), &phi).unwrap(), phi);
    }

    #[test]
    fn canonical_factorization_round_trips(phi in any_cyclic()) {
        let pair = canonical_factor(&phi);
        prop_assert!(pair.rot <= phi.src());
        let rebuilt = compose_cyclic(&iota(&pair.delta), &tau_power(phi.src(), pair.rot as i64)).unwrap();
        prop_assert_eq!(&rebuilt, &phi);
        prop_assert_eq!(from_canonical(&pair), phi);
    }

    #[test]
    fn dual_is_a_contravariant_involution((f, g, _h) in cyclic_chain()) {
        prop_assert_eq!(dual(&dual(&f)), f.clone());
        let gf = compose_cyclic(&g, &f).unwrap();
        prop_assert_eq!(dual(&gf), compose_cyclic(&dual(&f), &dual(&g)).unwrap());
    }

    #[test]
    fn underlying_is_functorial((f, g, _h) in cyclic_chain()) {
        let gf = underlying(&compose_cyclic(&g, &f).unwrap());
        let (uf, ug) = (underlying(&f), underlying(&g));
        prop_assert_eq!(gf, uf.iter().map(|&i| ug[i]).collect::<Vec<_>>());
    }

    #[test]
    fn iota_is_a_functor((n, m, k) in (0usize..=3, 0usize..=3, 0usize..=3)) {
        let fs = enumerate_monotone(n, m).unwrap();
        let gs = enumerate_monotone(m, k).unwrap();
        for f in &fs {
            for g in &gs {
                let gf = compose_ordinal(g, f).unwrap();
                prop_assert_eq!(iota(&gf), compose_cyclic(&iota(g), &iota(f)).unwrap());
            }
        }
    }

    #[test]
    fn generator_words_recompose(f in (0usize..=5, 0usize..=5).prop_flat_map(|(n, m)| ordinal(n, m))) {
        prop_assert_eq!(recompose(f.src(), &decompose_generators(&f)).unwrap(), f);
    }

    #[test]
    fn reedy_factors_compose_back(phi in any_cyclic()) {
        let (plus, minus) = reedy_factor(&phi);
        prop_assert_eq!(compose_cyclic(&plus, &minus).unwrap(), phi);
        prop_assert!(classify(&plus).is_plus());
        prop_assert!(classify(&minus).is_minus());
    }

    #[test]
    fn representable_evaluation_is_functorial((f, g, _h) in cyclic_chain()) {
        // Λ[k] evaluated on g then f agrees with evaluation on g ∘ f.
        let x = representable_cyclic(2, 3).unwrap();
        if g.tgt() <= x.truncation() && f.tgt() <= x.truncation() {
            let xg = x.evaluate(&g).unwrap();
            let xf = x.evaluate(&f).unwrap();
            let xgf = x.evaluate(&compose_cyclic(&g, &f).unwrap()).unwrap();
            prop_assert_eq!(xgf, xg.iter().map(|&e| xf[e]).collect::<Vec<_>>());
        }
    }

    #[test]
    fn json_round_trips(phi in any_cyclic()) {
        let text = serde_json::to_string(&phi).unwrap();
        prop_assert_eq!(serde_json::from_str::<CyclicMap>(&text).unwrap(), phi);
    }

    #[test]
    fn sym_composition_is_associative(
        (f, g, h) in (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2)
            .prop_flat_map(|(a, b, c, d)| (sym(a, b), sym(b, c), sym(c, d)))
    ) {
        let left = compose_sym(&h, &compose_sym(&g, &f).unwrap()).unwrap();
        let right = compose_sym(&compose_sym(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sym_factorization_recomposes(f in (0usize..=3, 0usize..=3).prop_flat_map(|(n, m)| sym(n, m))) {
        let (delta, automorphism) = f.canonical_factor();
        prop_assert_eq!(compose_sym(&SymMap::from_ordinal(&delta), &automorphism).unwrap(), f);
    }

    #[test]
    fn triangulations_parse_back(n in 2usize..=7, pick in any::<prop::sample::Index>()) {
        let all = enumerate_triangulations(n).unwrap();
        prop_assert_eq!(all.len() as u128, catalan(n as u64 - 1));
        let t = pick.get(&all);
        let text = t.triangles().iter().map(|[a, b, c]| format!("{a},{b},{c}")).collect::<Vec<_>>().join(";");
        prop_assert_eq!(&Triangulation::parse(&text).unwrap(), t);
    }
}
