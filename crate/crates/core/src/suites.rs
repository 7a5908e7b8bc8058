//! Exhaustive identity checks for Δ, ∇ and Λ up to a degree bound, packaged
//! as reports.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use crate::delta::{
    binomial, compose_ordinal, decompose_generators, degeneracy, enumerate_monotone, face, interval_dual,
    interval_dual_inv, recompose, OrdinalMap,
};
use crate::error::Result;
use crate::lambda::{
    canonical_factor, compose_cyclic, count_hom, cyclic_degeneracy, cyclic_face, dual, enumerate_canonical_pairs,
    enumerate_hom, fiber_over_underlying, from_canonical, from_underlying_data, is_cyclically_monotone, tau, tau_power,
    to_underlying_data, underlying, CyclicMap,
};
use crate::report::{AxiomCheck, Check};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_degree: usize,
    pub checks: Vec<AxiomCheck>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, max_degree: usize, checks: Vec<AxiomCheck>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { suite: suite.to_string(), max_degree, checks, pass }
    }
}

fn oc(g: &OrdinalMap, f: &OrdinalMap) -> OrdinalMap {
    compose_ordinal(g, f).expect("generator degrees agree")
}

fn cc(g: &CyclicMap, f: &CyclicMap) -> CyclicMap {
    compose_cyclic(g, f).expect("degrees agree")
}

/// The cosimplicial identities among faces and degeneracies with target
/// degree at most `max_degree`.
pub fn cosimplicial_identities(max_degree: usize) -> AxiomCheck {
    let mut check = Check::new("cosimplicial identities");
    for n in 0..max_degree {
        // d_j d_i = d_i d_{j-1}, [n] → [n+2], i < j
        for j in 0..=n + 2 {
            for i in 0..j {
                let (a, b) = (
                    oc(&face(n + 2, j).unwrap(), &face(n + 1, i).unwrap()),
                    oc(&face(n + 2, i).unwrap(), &face(n + 1, j - 1).unwrap()),
                );
                check.record(a == b, || json!({"identity": "dd", "n": n, "i": i, "j": j}));
            }
        }
        // s_j s_i = s_i s_{j+1}, [n+2] → [n], i ≤ j
        for j in 0..=n {
            for i in 0..=j {
                let a = oc(&degeneracy(n, j).unwrap(), &degeneracy(n + 1, i).unwrap());
                let b = oc(&degeneracy(n, i).unwrap(), &degeneracy(n + 1, j + 1).unwrap());
                check.record(a == b, || json!({"identity": "ss", "n": n, "i": i, "j": j}));
            }
        }
    }
    // s_j d_i : [n] → [n+1] → [n]
    for n in 0..=max_degree {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = oc(&degeneracy(n, j).unwrap(), &face(n + 1, i).unwrap());
                let rhs = if i < j {
                    oc(&face(n, i).unwrap(), &degeneracy(n - 1, j - 1).unwrap())
                } else if i == j || i == j + 1 {
                    OrdinalMap::identity(n)
                } else {
                    oc(&face(n, i - 1).unwrap(), &degeneracy(n - 1, j).unwrap())
                };
                check.record(lhs == rhs, || json!({"identity": "sd", "n": n, "i": i, "j": j}));
            }
        }
    }
    check.finish()
}

/// Every monotone map is the composite of its generator word.
pub fn generator_words(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("generator words recompose");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            for f in enumerate_monotone(n, m)? {
                let ok = recompose(n, &decompose_generators(&f)).ok().as_ref() == Some(&f);
                check.record(ok, || json!(f));
            }
        }
    }
    Ok(check.finish())
}

/// Counts of monotone maps agree with `C(n+m+1, n+1)` and are distinct.
pub fn monotone_counts(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("monotone map counts");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            let maps = enumerate_monotone(n, m)?;
            let distinct: BTreeSet<_> = maps.iter().collect();
            let ok = maps.len() as u128 == binomial((n + m + 1) as u64, (n + 1) as u64) && distinct.len() == maps.len();
            check.record(ok, || json!({"n": n, "m": m, "found": maps.len()}));
        }
    }
    Ok(check.finish())
}

/// Δ/∇ duality: round trips, contravariance and hom bijections.
pub fn interval_duality(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("interval duality");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            let homs = enumerate_monotone(n, m)?;
            let images: BTreeSet<_> = homs.iter().map(interval_dual).collect();
            check.record(images.len() == homs.len(), || json!({"n": n, "m": m, "collision": true}));
            for f in &homs {
                check.record(interval_dual_inv(&interval_dual(f)) == *f, || json!(f));
            }
            for k in 0..=max_degree.min(3) {
                for g in enumerate_monotone(m, k)? {
                    for f in &homs {
                        let lhs = interval_dual(&oc(&g, f));
                        let rhs = interval_dual(f).compose(&interval_dual(&g))?;
                        check.record(lhs == rhs, || json!({"g": g, "f": f}));
                    }
                }
            }
        }
    }
    Ok(check.finish())
}

pub fn simplicial_suite(max_degree: usize) -> Result<SuiteReport> {
    let checks = vec![
        cosimplicial_identities(max_degree),
        generator_words(max_degree)?,
        monotone_counts(max_degree)?,
        interval_duality(max_degree)?,
    ];
    Ok(SuiteReport::new("simplicial", max_degree, checks))
}

/// The cyclic identities for generators of degree at most `max_degree`,
/// including `τ_n^{n+1} = id`.
pub fn cyclic_identities(max_degree: usize) -> AxiomCheck {
    let mut check = Check::new("cyclic identities");
    for n in 1..=max_degree {
        let t = tau(n);
        let ok = cc(&t, &cyclic_face(n, 0).unwrap()) == cyclic_face(n, n).unwrap();
        check.record(ok, || json!({"identity": "t d_0", "n": n}));
        for i in 1..=n {
            let ok = cc(&t, &cyclic_face(n, i).unwrap()) == cc(&cyclic_face(n, i - 1).unwrap(), &tau(n - 1));
            check.record(ok, || json!({"identity": "t d_i", "n": n, "i": i}));
        }
    }
    for n in 0..=max_degree {
        let (t, t1) = (tau(n), tau(n + 1));
        let ok = cc(&t, &cyclic_degeneracy(n, 0).unwrap()) == cc(&cyclic_degeneracy(n, n).unwrap(), &cc(&t1, &t1));
        check.record(ok, || json!({"identity": "t s_0", "n": n}));
        for i in 1..=n {
            let ok = cc(&t, &cyclic_degeneracy(n, i).unwrap()) == cc(&cyclic_degeneracy(n, i - 1).unwrap(), &t1);
            check.record(ok, || json!({"identity": "t s_i", "n": n, "i": i}));
        }
        let mut power = CyclicMap::identity(n);
        for _ in 0..=n {
            power = cc(&t, &power);
        }
        check.record(power.is_identity(), || json!({"identity": "t^(n+1)", "n": n}));
    }
    check.finish()
}

/// `Aut(⟨n⟩)` is cyclic of order `n+1`, generated by `τ_n`.
pub fn automorphism_groups(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("automorphism groups cyclic of order n+1");
    for n in 0..=max_degree {
        let autos: BTreeSet<_> = enumerate_hom(n, n)?.into_iter().filter(|f| f.is_automorphism()).collect();
        let powers: BTreeSet<_> = (0..=n as i64).map(|k| tau_power(n, k)).collect();
        check.record(autos == powers && autos.len() == n + 1, || json!({"n": n, "found": autos.len()}));
    }
    Ok(check.finish())
}

/// `|Hom(⟨n⟩,⟨m⟩)| = (n+1)·C(n+m+1, n+1)`, counted three ways: windows,
/// canonical pairs, and underlying maps with fiber data.
pub fn hom_counts(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("hom counts");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            let expected = (n as u128 + 1) * binomial((n + m + 1) as u64, (n + 1) as u64);
            let windows = enumerate_hom(n, m)?;
            let distinct: BTreeSet<_> = windows.iter().collect();
            let pairs = enumerate_canonical_pairs(n, m)?.len() as u128;
            let by_underlying = count_by_underlying(n, m);
            let ok = windows.len() as u128 == expected
                && distinct.len() == windows.len()
                && pairs == expected
                && by_underlying == expected
                && count_hom(n, m) == expected;
            check.record(ok, || {
                json!({"n": n, "m": m, "expected": expected.to_string(), "windows": windows.len(),
                       "pairs": pairs.to_string(), "underlying": by_underlying.to_string()})
            });
            let data: BTreeSet<_> = windows.iter().map(|f| format!("{:?}", to_underlying_data(f))).collect();
            check.record(data.len() == windows.len(), || json!({"n": n, "m": m, "underlying data collide": true}));
        }
    }
    Ok(check.finish())
}

/// Sums fiber sizes over all cyclically monotone set maps.
fn count_by_underlying(n: usize, m: usize) -> u128 {
    (0..=n)
        .map(|_| 0..=m)
        .multi_cartesian_product()
        .filter(|u| is_cyclically_monotone(m, u).is_some())
        .map(|u| fiber_over_underlying(m, &u).len() as u128)
        .sum()
}

/// `from_canonical ∘ canonical_factor = id` and conversely.
pub fn canonical_factorization(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("canonical factorization");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            for phi in enumerate_hom(n, m)? {
                check.record(from_canonical(&canonical_factor(&phi)) == phi, || json!(phi));
                let data = to_underlying_data(&phi);
                check.record(from_underlying_data(&data).ok().as_ref() == Some(&phi), || json!(phi));
            }
            for pair in enumerate_canonical_pairs(n, m)? {
                check.record(canonical_factor(&from_canonical(&pair)) == pair, || json!(pair));
            }
        }
    }
    Ok(check.finish())
}

/// `dual` is involutive, contravariant, fixes objects and is bijective on
/// hom-sets.
pub fn self_duality(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("self-duality");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            let homs = enumerate_hom(n, m)?;
            let duals: BTreeSet<_> = homs.iter().map(dual).collect();
            let targets: BTreeSet<_> = enumerate_hom(m, n)?.into_iter().collect();
            check.record(duals == targets, || json!({"n": n, "m": m, "bijective": false}));
            for f in &homs {
                let d = dual(f);
                check.record(d.src() == m && d.tgt() == n && dual(&d) == *f, || json!(f));
            }
            check.record(dual(&CyclicMap::identity(n)).is_identity(), || json!({"identity": n}));
        }
    }
    let bound = max_degree.min(3);
    for n in 0..=bound {
        for m in 0..=bound {
            let fs = enumerate_hom(n, m)?;
            for k in 0..=bound {
                for g in enumerate_hom(m, k)? {
                    for f in &fs {
                        let ok = dual(&cc(&g, f)) == cc(&dual(f), &dual(&g));
                        check.record(ok, || json!({"g": g, "f": f}));
                    }
                }
            }
        }
    }
    Ok(check.finish())
}

/// The fiber of the underlying-map functor over `u` has `n+1` elements for
/// constant `u` and one otherwise.
pub fn underlying_fibers(max_degree: usize) -> Result<AxiomCheck> {
    let mut check = Check::new("fibers of the underlying map");
    for n in 0..=max_degree {
        for m in 0..=max_degree {
            let images: BTreeSet<Vec<usize>> = enumerate_hom(n, m)?.iter().map(underlying).collect();
            for u in images {
                let constant = u.iter().all_equal();
                let fiber = fiber_over_underlying(m, &u);
                let expected = if constant { n + 1 } else { 1 };
                let ok = fiber.len() == expected && fiber.iter().all(|f| underlying(f) == u);
                check.record(ok, || json!({"m": m, "u": u, "found": fiber.len()}));
            }
        }
    }
    Ok(check.finish())
}

pub fn cyclic_suite(max_degree: usize) -> Result<SuiteReport> {
    let checks = vec![
        cyclic_identities(max_degree),
        automorphism_groups(max_degree)?,
        hom_counts(max_degree)?,
        canonical_factorization(max_degree)?,
        self_duality(max_degree)?,
        underlying_fibers(max_degree)?,
    ];
    Ok(SuiteReport::new("cyclic", max_degree, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplicial_suite_passes() {
        let report = simplicial_suite(3).unwrap();
        assert!(report.pass, "{report:#?}");
    }

    #[test]
    fn cyclic_suite_passes() {
        let report = cyclic_suite(3).unwrap();
        assert!(report.pass, "{report:#?}");
        assert!(report.checks.iter().all(|c| c.checked > 0));
    }

    #[test]
    fn underlying_count_small() {
        assert_eq!(count_by_underlying(1, 0), 2);
        assert_eq!(count_by_underlying(0, 1), 2);
    }
}
