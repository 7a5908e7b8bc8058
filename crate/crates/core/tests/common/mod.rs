//! Shared fixtures: a pool of small cyclic sets and seeded random arrows.

#![allow(dead_code)]

use std::ops::ControlFlow;

use cyclic_core::lifting::{enumerate_squares, has_rlp, LiftingProblem};
use cyclic_core::presheaf::{
    boundary_faces, cyclic_horn, cyclic_nerve, generated_subobject, nerve, representable_cyclic, restrict, Arrow,
    FinCyclicSet, FinPresheaf, FinSimplicialSet, FiniteCategory, MapSearch, PresheafMap,
};
use cyclic_core::reedy::{cset_acyclic_generators, cset_generators};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_c1c1;
pub const TRUNCATION: usize = 2;

pub fn z_mod(k: usize) -> Vec<Vec<usize>> {
    (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect()
}

/// Small cyclic sets at truncation 2.
pub fn pool() -> Vec<(String, FinCyclicSet)> {
    let n = TRUNCATION;
    vec![
        ("point".into(), FinCyclicSet::constant(1, n)),
        ("two points".into(), FinCyclicSet::constant(2, n)),
        ("Λ[0]".into(), representable_cyclic(0, n).unwrap()),
        ("Λ[1]".into(), representable_cyclic(1, n).unwrap()),
        ("∂Λ[1]".into(), boundary_faces(1, n).unwrap().source),
        ("Λ[1,0]".into(), cyclic_horn(1, 0, n).unwrap().source),
        ("cyclic nerve ℤ/2".into(), cyclic_nerve(&z_mod(2), n).unwrap()),
        ("cyclic nerve ℤ/3".into(), cyclic_nerve(&z_mod(3), n).unwrap()),
    ]
}

/// Reedy corpus at truncation 3.
pub fn reedy_corpus() -> Vec<(String, FinCyclicSet)> {
    vec![
        ("point".into(), FinCyclicSet::constant(1, 3)),
        ("two points".into(), FinCyclicSet::constant(2, 3)),
        ("cyclic nerve ℤ/2".into(), cyclic_nerve(&z_mod(2), 3).unwrap()),
        ("Λ[1]".into(), representable_cyclic(1, 3).unwrap()),
    ]
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// The `k`-th map `x → y` in search order.
fn nth_map(x: &FinCyclicSet, y: &FinCyclicSet, k: u128) -> PresheafMap {
    let mut seen = 0;
    let mut found = None;
    MapSearch::new(x, y).for_each(|m| {
        if seen == k {
            found = Some(m.clone());
            return ControlFlow::Break(());
        }
        seen += 1;
        ControlFlow::Continue(())
    });
    found.expect("index below the map count")
}

/// A uniformly chosen map out of `x` into some pool member.
pub fn random_map_from(rng: &mut impl Rng, x: &FinCyclicSet) -> Arrow<FinCyclicSet> {
    let pool = pool();
    loop {
        let (_, y) = pool.choose(rng).unwrap();
        let count = MapSearch::new(x, y).count();
        if count == 0 {
            continue;
        }
        let map = nth_map(x, y, rng.gen_range(0..count));
        return Arrow::new(x.clone(), y.clone(), map).unwrap();
    }
}

pub fn random_map(rng: &mut impl Rng) -> Arrow<FinCyclicSet> {
    let (_, x) = pool().choose(rng).unwrap().clone();
    random_map_from(rng, &x)
}

/// A monomorphism: a generator or a random generated subobject.
pub fn random_mono(rng: &mut impl Rng) -> (String, Arrow<FinCyclicSet>) {
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(0..=1);
            (format!("boundary {n}"), cset_generators(n, TRUNCATION).unwrap())
        }
        1 => {
            let k = rng.gen_range(0..=1);
            (format!("horn 1,{k}"), cset_acyclic_generators(1, k, TRUNCATION).unwrap())
        }
        _ => {
            let (name, b) = pool().choose(rng).unwrap().clone();
            let level = rng.gen_range(0..=1).min(TRUNCATION);
            let seeds: Vec<(usize, usize)> =
                if b.card(level) == 0 { vec![] } else { vec![(level, rng.gen_range(0..b.card(level)))] };
            (format!("subobject of {name} at {seeds:?}"), generated_subobject(&b, &seeds).unwrap())
        }
    }
}

/// A random relabelling `x ≅ x'` of a cyclic set, as an arrow `x → x'`.
pub fn random_iso(rng: &mut impl Rng, x: &FinCyclicSet) -> Arrow<FinCyclicSet> {
    let top = x.truncation();
    let perms: Vec<Vec<usize>> = (0..=top)
        .map(|n| {
            let mut p: Vec<usize> = (0..x.card(n)).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let relabel = |n: usize, table: &[usize], target_level: usize| -> Vec<usize> {
        let mut out = vec![0; table.len()];
        for (e, &v) in table.iter().enumerate() {
            out[perms[n][e]] = perms[target_level][v];
        }
        out
    };
    let d = (0..=top)
        .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| relabel(n, x.d(n, i), n - 1)).collect() })
        .collect();
    let s = (0..=top)
        .map(|n| if n == top { vec![] } else { (0..=n).map(|i| relabel(n, x.s(n, i), n + 1)).collect() })
        .collect();
    let t = (0..=top).map(|n| relabel(n, x.t(n), n)).collect();
    let y = FinCyclicSet::new(top, x.cards().to_vec(), d, s, t).unwrap();
    Arrow::new(x.clone(), y, PresheafMap::new(perms)).unwrap()
}

/// Inverse of a levelwise bijective arrow.
pub fn inverse(f: &Arrow<FinCyclicSet>) -> Arrow<FinCyclicSet> {
    let levels = f
        .map
        .levels
        .iter()
        .map(|level| {
            let mut inv = vec![0; level.len()];
            for (a, &b) in level.iter().enumerate() {
                inv[b] = a;
            }
            inv
        })
        .collect();
    Arrow::new(f.target.clone(), f.source.clone(), PresheafMap::new(levels)).unwrap()
}

pub fn to_point(x: &FinCyclicSet) -> Arrow<FinCyclicSet> {
    let point = FinCyclicSet::constant(1, x.truncation());
    let map = PresheafMap::new(x.cards().iter().map(|&c| vec![0; c]).collect());
    Arrow::new(x.clone(), point, map).unwrap()
}

/// The nerve of `0 < 1 < 2`, a 3-object poset.
pub fn three_object_poset(truncation: usize) -> FinSimplicialSet {
    nerve(&FiniteCategory::linear_order(2), truncation)
}

/// The nerve of ℤ/2 at truncation 2 without its last 2-simplex; the Segal
/// map at level 2 misses the chain `(1, 1)`.
pub fn doctored_nerve() -> FinSimplicialSet {
    let x = nerve(&FiniteCategory::cyclic_group(2), 2);
    let keep = vec![vec![true], vec![true; 2], vec![true, true, true, false]];
    restrict(&x, &keep).unwrap().source
}

/// One randomized lifting instance: a mono `i`, a composable pair `p`, `q`,
/// and relabelling isomorphisms of the source and target of `p`.
pub struct LiftingInstance {
    pub label: String,
    pub i: Arrow<FinCyclicSet>,
    pub p: Arrow<FinCyclicSet>,
    pub q: Arrow<FinCyclicSet>,
    pub alpha: Arrow<FinCyclicSet>,
    pub beta: Arrow<FinCyclicSet>,
}

pub const CORPUS_SIZE: usize = 20;

pub fn lifting_corpus() -> Vec<LiftingInstance> {
    let mut rng = rng();
    (0..CORPUS_SIZE)
        .map(|k| {
            let (label, i) = random_mono(&mut rng);
            // Every third instance maps to a point so that RLP can hold non-vacuously.
            let p = if k % 3 == 0 {
                let (_, x) = pool().choose(&mut rng).unwrap().clone();
                to_point(&x)
            } else {
                random_map(&mut rng)
            };
            let q = if k % 2 == 0 { to_point(&p.target) } else { random_map_from(&mut rng, &p.target) };
            let alpha = random_iso(&mut rng, &p.source);
            let beta = random_iso(&mut rng, &p.target);
            LiftingInstance { label: format!("#{k} {label}"), i, p, q, alpha, beta }
        })
        .collect()
}

/// Checks a verdict against its witness, or every square against a lift.
pub fn verify_verdict(i: &Arrow<FinCyclicSet>, p: &Arrow<FinCyclicSet>) -> Result<bool, String> {
    let verdict = has_rlp(p, i).map_err(|e| e.to_string())?;
    match &verdict.witness {
        Some(square) => {
            let problem = LiftingProblem { i, p, square: square.clone() };
            if !problem.commutes() {
                return Err("witness square does not commute".into());
            }
            if problem.solve().is_some() {
                return Err("witness square has a lift".into());
            }
            let brute = MapSearch::new(&i.target, &p.source).all();
            if brute.iter().any(|l| problem.is_lift(l)) {
                return Err("brute force found a lift for the witness".into());
            }
        }
        None => {
            for square in enumerate_squares(i, p).map_err(|e| e.to_string())? {
                let problem = LiftingProblem { i, p, square };
                match problem.solve() {
                    Some(lift) if problem.is_lift(&lift) => {}
                    _ => return Err("a square reported liftable has no valid lift".into()),
                }
            }
        }
    }
    Ok(verdict.holds)
}

/// All lifting checks for one instance.
pub fn check_instance(inst: &LiftingInstance) -> Result<(), String> {
    let (i, p, q) = (&inst.i, &inst.p, &inst.q);
    let holds_p = verify_verdict(i, p)?;
    let holds_q = verify_verdict(i, q)?;
    let qp = p.then(q).map_err(|e| e.to_string())?;
    let holds_qp = verify_verdict(i, &qp)?;
    if holds_p && holds_q && !holds_qp {
        return Err("composite of lifting maps fails to lift".into());
    }
    for iso in [&inst.alpha, &inst.beta] {
        if !verify_verdict(i, iso)? {
            return Err("an isomorphism fails to lift".into());
        }
    }
    let i_iso = random_iso(&mut ChaCha8Rng::seed_from_u64(SEED ^ 1), &i.target);
    let via_iso = i.then(&i_iso).map_err(|e| e.to_string())?;
    if verify_verdict(&via_iso, p)? != holds_p {
        return Err("verdict changes when i is composed with an isomorphism".into());
    }
    if !verify_verdict(&Arrow::identity(i.target.clone()), p)? {
        return Err("an identity fails as a left map".into());
    }
    let conjugate = inverse(&inst.alpha).then(p).and_then(|a| a.then(&inst.beta)).map_err(|e| e.to_string())?;
    if verify_verdict(i, &conjugate)? != holds_p {
        return Err("verdict is not invariant under conjugation by isomorphisms".into());
    }
    Ok(())
}
