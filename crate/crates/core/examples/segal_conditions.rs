//! Segal and 2-Segal conditions: nerves pass, a doctored nerve fails with
//! an explicit witness.

use cyclic_core::presheaf::{nerve, restrict, FiniteCategory};
use cyclic_core::segal::{catalan, enumerate_triangulations, segal_check, two_segal_report};

fn main() -> cyclic_core::Result<()> {
    for n in 2..=6 {
        println!(
            "triangulations of the {}-gon: {} (Catalan {})",
            n + 1,
            enumerate_triangulations(n)?.len(),
            catalan(n as u64 - 1)
        );
    }
    let square: Vec<_> = enumerate_triangulations(3)?.iter().map(|t| t.triangles().to_vec()).collect();
    println!("the square: {square:?}");

    let x = nerve(&FiniteCategory::cyclic_group(2), 4);
    for n in 2..=4 {
        println!("nerve of ℤ/2, Segal at {n}: {:?}", segal_check(&x, n)?.verdict);
    }
    println!("nerve of ℤ/2 is 2-Segal up to 4: {}", two_segal_report(&x, 4)?.pass);

    let full = nerve(&FiniteCategory::cyclic_group(2), 2);
    let keep = vec![vec![true], vec![true; 2], vec![true, true, true, false]];
    let doctored = restrict(&full, &keep)?.source;
    let v = segal_check(&doctored, 2)?;
    println!("doctored nerve: {}", serde_json::to_string(&v).expect("verdicts serialize"));
    Ok(())
}
