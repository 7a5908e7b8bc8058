//! Right lifting properties against the generating (acyclic) cofibrations,
//! with explicit witnesses for failures.

use cyclic_core::lifting::{has_rlp, is_acyclic_fibration_up_to, is_fibration_up_to, LiftingProblem};
use cyclic_core::presheaf::{cyclic_nerve, representable_cyclic, Arrow, FinCyclicSet, FinPresheaf, PresheafMap};
use cyclic_core::reedy::cset_generators;

fn to_point(x: &FinCyclicSet) -> cyclic_core::Result<Arrow<FinCyclicSet>> {
    let map = PresheafMap::new(x.cards().iter().map(|&c| vec![0; c]).collect());
    Arrow::new(x.clone(), FinCyclicSet::constant(1, x.truncation()), map)
}

fn main() -> cyclic_core::Result<()> {
    let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 3)?;
    let id = Arrow::identity(x.clone());
    println!("identity: acyclic fibration up to 2: {}", is_acyclic_fibration_up_to(&id, 2)?.holds);

    let p = to_point(&representable_cyclic(1, 3)?)?;
    let i = cset_generators(1, 3)?;
    let verdict = has_rlp(&p, &i)?;
    println!("Λ[1] → * against ∂Λ[1] → Λ[1]: holds {} after {} squares", verdict.holds, verdict.squares);
    if let Some(square) = verdict.witness {
        let problem = LiftingProblem { i: &i, p: &p, square };
        println!("witness commutes: {}, has a lift: {}", problem.commutes(), problem.solve().is_some());
    }

    let q = to_point(&x)?;
    let fib = is_fibration_up_to(&q, 2)?;
    println!("cyclic nerve of ℤ/2 → *: fibration up to 2: {}", fib.holds);
    if let Some(failure) = fib.failure {
        println!("fails against {}", failure.generator);
    }
    Ok(())
}
