//! Monotone maps in Δ: generator words, epi-mono factorization and the
//! duality with the interval category ∇.

use cyclic_core::delta::{
    decompose_generators, enumerate_monotone, interval_dual, interval_dual_inv, recompose, OrdinalMap,
};

fn main() -> cyclic_core::Result<()> {
    let f = OrdinalMap::new(3, 2, vec![0, 0, 2, 2])?;
    let word = decompose_generators(&f);
    println!("f = {:?}", f.images());
    println!("as generators: {word:?}");
    assert_eq!(recompose(3, &word)?, f);

    let (epi, mono) = f.epi_mono();
    println!("epi {:?} then mono {:?}", epi.images(), mono.images());

    let g = interval_dual(&f);
    println!("interval dual: {:?} → {:?}", g.images(), interval_dual_inv(&g).images());

    for n in 0..=3 {
        println!("|Δ([{n}], [2])| = {}", enumerate_monotone(n, 2)?.len());
    }
    Ok(())
}
