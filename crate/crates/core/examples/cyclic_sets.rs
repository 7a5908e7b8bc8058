//! Finite cyclic sets: representables, boundaries, horns, spines, cyclic
//! nerves, and the Kan extension along Δ → Λ.

use cyclic_core::presheaf::{
    boundary_faces, cyclic_horn, cyclic_nerve, kan_extend, representable_cyclic, representable_simplicial, spine,
    FinPresheaf,
};

fn main() -> cyclic_core::Result<()> {
    let l1 = representable_cyclic(1, 3)?;
    println!("Λ[1] level sizes: {:?}", l1.cards());
    let j = l1.underlying_simplicial();
    println!("as a simplicial set: nondegenerate {:?}, χ = {}", j.nondegenerate_counts()?, j.euler_characteristic()?);

    let b = boundary_faces(2, 3)?;
    println!("∂Λ[2] level sizes: {:?}", b.source.cards());
    let h = cyclic_horn(2, 1, 3)?;
    println!("Λ[2,1] level sizes: {:?}", h.source.cards());
    let s = spine(2, 3)?;
    println!("Γ(2) level sizes: {:?}", s.source.cards());

    let z3: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
    let x = cyclic_nerve(&z3, 2)?;
    println!("cyclic nerve of ℤ/3: {:?}, axioms violated: {}", x.cards(), x.validate().len());

    let k = kan_extend(&representable_simplicial(1, 1)?, 2)?;
    println!("Kan extension of Δ[1] has sizes {:?}", k.object().cards());
    Ok(())
}
