//! Crossed simplicial groups: the axiom checker on Λ and Δ𝔖, and the
//! simplicial set of automorphism groups built from Λ.

use cyclic_core::crossed::{build_g_star, verify_csg_axioms, CrossedOracle};

fn main() -> cyclic_core::Result<()> {
    for report in [verify_csg_axioms(&CrossedOracle::lambda(), 3)?, verify_csg_axioms(&CrossedOracle::symmetric(), 2)?]
    {
        println!("{}: automorphism groups {:?}, axioms hold: {}", report.oracle, report.automorphisms, report.pass);
        for law in &report.laws {
            println!("  {} ({} checks): {}", law.axiom, law.checked, law.pass);
        }
    }
    let g = build_g_star(&CrossedOracle::lambda(), 3)?;
    println!("Λ_* level sizes: {:?}", (0..=3).map(|n| g.card(n)).collect::<Vec<_>>());
    println!("nondegenerate simplices: {:?}", g.nondegenerate_counts()?);
    println!("Euler characteristic: {}", g.euler_characteristic()?);
    Ok(())
}
