//! The generalized Reedy structure on Λ: degree classes, factorizations,
//! latching and matching objects with their cyclic actions.

use cyclic_core::lambda::CyclicMap;
use cyclic_core::presheaf::{cyclic_nerve, representable_cyclic};
use cyclic_core::reedy::{classify, latching, matching, reedy_factor, verify_generalized_reedy};

fn main() -> cyclic_core::Result<()> {
    let report = verify_generalized_reedy(2, &classify)?;
    for axiom in &report.axioms {
        println!("{} ({} checks): {}", axiom.axiom, axiom.checked, axiom.pass);
    }

    let phi = CyclicMap::new(2, 2, vec![1, 1, 3])?;
    let (plus, minus) = reedy_factor(&phi);
    println!("{:?} = {:?} ∘ {:?}", phi.window(), plus.window(), minus.window());

    let point = representable_cyclic(0, 3)?;
    for n in 0..=2 {
        println!("L_{n} of Λ[0]: {} elements", latching(&point, n)?.gset.card);
    }
    let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 3)?;
    for n in 0..=2 {
        let m = matching(&x, n)?;
        println!("M_{n} of the cyclic nerve of ℤ/2: {} families, action {:?}", m.gset.card, m.gset.action);
    }
    Ok(())
}
