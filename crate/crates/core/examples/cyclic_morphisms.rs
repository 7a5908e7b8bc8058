//! Morphisms of Λ as ℤ-equivariant windows: composition, the rotation τ,
//! canonical factorization, underlying maps and the self-duality.

use cyclic_core::lambda::{
    canonical_factor, compose_cyclic, count_hom, dual, enumerate_hom, from_canonical, tau, tau_power, underlying,
    CyclicMap,
};

fn main() -> cyclic_core::Result<()> {
    let t = tau(2);
    println!("τ_2 window {:?}", t.window());
    println!("τ_2³ is the identity: {}", tau_power(2, 3).is_identity());

    let phi = CyclicMap::new(2, 1, vec![1, 1, 2])?;
    let pair = canonical_factor(&phi);
    println!("φ = {:?} factors as Δ-part {:?} after τ^{}", phi.window(), pair.delta.images(), pair.rot);
    assert_eq!(from_canonical(&pair), phi);

    println!("underlying map of φ: {:?}", underlying(&phi));
    let d = dual(&phi);
    println!("dual φ: ⟨{}⟩ → ⟨{}⟩ with window {:?}", d.src(), d.tgt(), d.window());
    assert_eq!(dual(&d), phi);

    let composite = compose_cyclic(&t, &tau(2))?;
    println!("τ ∘ τ = {:?}", composite.window());

    for n in 0..=3 {
        let row: Vec<String> = (0..=3).map(|m| count_hom(n, m).to_string()).collect();
        println!("|Λ(⟨{n}⟩, ⟨m⟩)| for m = 0..3: {}", row.join(" "));
    }
    println!(
        "the two maps ⟨1⟩ → ⟨0⟩: {:?}",
        enumerate_hom(1, 0)?.iter().map(|f| f.window().to_vec()).collect::<Vec<_>>()
    );
    Ok(())
}
