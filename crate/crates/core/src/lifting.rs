//! Right lifting properties of maps of finite presheaves, decided by
//! exhaustive search over commuting squares.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presheaf::{compose_maps, Arrow, FinCyclicSet, FinPresheaf, MapSearch, PresheafMap};
use crate::reedy::{cset_acyclic_generators, cset_generators};

const SQUARE_LIMIT: u128 = 1_000_000;

/// A commuting square from `i : A → B` to `p : X → Y`:
/// `top : A → X`, `bottom : B → Y` with `p ∘ top = bottom ∘ i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Square {
    pub top: PresheafMap,
    pub bottom: PresheafMap,
}

/// A lifting problem: a square between two arrows.
#[derive(Debug, Clone)]
pub struct LiftingProblem<'a, P> {
    pub i: &'a Arrow<P>,
    pub p: &'a Arrow<P>,
    pub square: Square,
}

impl<P: FinPresheaf> LiftingProblem<'_, P> {
    pub fn commutes(&self) -> bool {
        compose_maps(&self.p.map, &self.square.top) == compose_maps(&self.square.bottom, &self.i.map)
    }

    /// Both triangles: `lift ∘ i = top` and `p ∘ lift = bottom`.
    pub fn is_lift(&self, lift: &PresheafMap) -> bool {
        compose_maps(lift, &self.i.map) == self.square.top && compose_maps(&self.p.map, lift) == self.square.bottom
    }

    /// A diagonal `B → X`, if one exists.
    pub fn solve(&self) -> Option<PresheafMap> {
        let (i, top) = (&self.i.map, &self.square.top);
        let mut pinned: Vec<Vec<Option<usize>>> = self.i.target.cards().iter().map(|&c| vec![None; c]).collect();
        for (n, level) in i.levels.iter().enumerate() {
            for (a, &b) in level.iter().enumerate() {
                match pinned[n][b] {
                    Some(v) if v != top.levels[n][a] => return None,
                    _ => pinned[n][b] = Some(top.levels[n][a]),
                }
            }
        }
        let (p, bottom) = (&self.p.map, &self.square.bottom);
        let search = MapSearch::new(&self.i.target, &self.p.source)
            .pinned(pinned)
            .filter(move |n, b, x| p.levels[n][x] == bottom.levels[n][b]);
        let mut found = None;
        search.for_each(|lift| {
            if self.is_lift(lift) {
                found = Some(lift.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }
}

fn check_shapes<P: FinPresheaf>(i: &Arrow<P>, p: &Arrow<P>) -> Result<()> {
    if i.source.truncation() != p.source.truncation() {
        return Err(Error::InvalidMap(format!(
            "truncations differ: {} and {}",
            i.source.truncation(),
            p.source.truncation()
        )));
    }
    Ok(())
}

/// Visits every commuting square. Returns the number visited.
fn for_each_square<P: FinPresheaf>(
    i: &Arrow<P>,
    p: &Arrow<P>,
    mut visit: impl FnMut(Square) -> ControlFlow<()>,
) -> Result<u128> {
    check_shapes(i, p)?;
    let mut count: u128 = 0;
    let mut stop = false;
    let mut over_limit = false;
    MapSearch::new(&i.target, &p.target).for_each(|bottom| {
        let along = compose_maps(bottom, &i.map);
        let pm = &p.map;
        MapSearch::new(&i.source, &p.source).filter(|n, a, x| pm.levels[n][x] == along.levels[n][a]).for_each(|top| {
            count += 1;
            if count > SQUARE_LIMIT {
                over_limit = true;
                return ControlFlow::Break(());
            }
            if visit(Square { top: top.clone(), bottom: bottom.clone() }).is_break() {
                stop = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if stop || over_limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if over_limit {
        return Err(Error::ResourceLimit { what: "lifting squares", needed: count, limit: SQUARE_LIMIT });
    }
    Ok(count)
}

/// All commuting squares from `i` to `p`.
pub fn enumerate_squares<P: FinPresheaf>(i: &Arrow<P>, p: &Arrow<P>) -> Result<Vec<Square>> {
    let mut out = Vec::new();
    for_each_square(i, p, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RlpVerdict {
    pub holds: bool,
    /// Squares examined.
    pub squares: u128,
    /// A square with no lift.
    pub witness: Option<Square>,
}

/// Whether `p` has the right lifting property against `i`.
pub fn has_rlp<P: FinPresheaf>(p: &Arrow<P>, i: &Arrow<P>) -> Result<RlpVerdict> {
    let mut witness = None;
    let squares = for_each_square(i, p, |square| {
        let problem = LiftingProblem { i, p, square };
        if problem.solve().is_some() {
            ControlFlow::Continue(())
        } else {
            witness = Some(problem.square);
            ControlFlow::Break(())
        }
    })?;
    Ok(RlpVerdict { holds: witness.is_none(), squares, witness })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorFailure {
    pub generator: String,
    pub witness: Square,
}

/// The outcome of testing against generators of degree at most `max_degree`;
/// a certificate only up to that degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationVerdict {
    pub max_degree: usize,
    pub holds: bool,
    pub generators_checked: usize,
    pub failure: Option<GeneratorFailure>,
}

fn against_generators(
    p: &Arrow<FinCyclicSet>,
    max_degree: usize,
    generators: Vec<(String, Arrow<FinCyclicSet>)>,
) -> Result<FibrationVerdict> {
    let mut checked = 0;
    for (label, i) in generators {
        checked += 1;
        let verdict = has_rlp(p, &i)?;
        if let Some(witness) = verdict.witness {
            return Ok(FibrationVerdict {
                max_degree,
                holds: false,
                generators_checked: checked,
                failure: Some(GeneratorFailure { generator: label, witness }),
            });
        }
    }
    Ok(FibrationVerdict { max_degree, holds: true, generators_checked: checked, failure: None })
}

fn headroom(p: &Arrow<FinCyclicSet>, max_degree: usize) -> Result<usize> {
    let top = p.source.truncation();
    if top < max_degree + 1 {
        return Err(Error::TruncationExceeded { degree: max_degree + 1, truncation: top });
    }
    Ok(top)
}

/// RLP against `∂Λ[n] → Λ[n]` for `n ≤ max_degree`.
pub fn is_acyclic_fibration_up_to(p: &Arrow<FinCyclicSet>, max_degree: usize) -> Result<FibrationVerdict> {
    let top = headroom(p, max_degree)?;
    let gens =
        (0..=max_degree).map(|n| Ok((format!("boundary {n}"), cset_generators(n, top)?))).collect::<Result<_>>()?;
    against_generators(p, max_degree, gens)
}

/// RLP against `Λ[n,k] → Λ[n]` for `1 ≤ n ≤ max_degree`.
pub fn is_fibration_up_to(p: &Arrow<FinCyclicSet>, max_degree: usize) -> Result<FibrationVerdict> {
    let top = headroom(p, max_degree)?;
    let mut gens = Vec::new();
    for n in 1..=max_degree {
        for k in 0..=n {
            gens.push((format!("horn {n},{k}"), cset_acyclic_generators(n, k, top)?));
        }
    }
    against_generators(p, max_degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{cyclic_nerve, identity_map, representable_cyclic};

    fn to_point(x: &FinCyclicSet) -> Arrow<FinCyclicSet> {
        let point = FinCyclicSet::constant(1, x.truncation());
        let map = PresheafMap::new(x.cards().iter().map(|&c| vec![0; c]).collect());
        Arrow::new(x.clone(), point, map).unwrap()
    }

    fn from_empty(x: &FinCyclicSet) -> Arrow<FinCyclicSet> {
        let empty = FinCyclicSet::empty(x.truncation());
        Arrow::new(empty, x.clone(), PresheafMap::new(vec![vec![]; x.truncation() + 1])).unwrap()
    }

    #[test]
    fn identity_squares() {
        let pt = Arrow::identity(FinCyclicSet::constant(1, 2));
        assert_eq!(enumerate_squares(&pt, &pt).unwrap().len(), 1);
    }

    #[test]
    fn lifting_from_the_empty_object_picks_a_vertex() {
        let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        let i = from_empty(&representable_cyclic(0, 2).unwrap());
        let squares = enumerate_squares(&i, &to_point(&x)).unwrap();
        assert_eq!(squares.len(), 1);
        assert!(has_rlp(&to_point(&x), &i).unwrap().holds);
        let empty = FinCyclicSet::empty(2);
        let verdict = has_rlp(&to_point(&empty), &i).unwrap();
        assert_eq!((verdict.holds, verdict.squares), (false, 1));
    }

    #[test]
    fn squares_match_product_filter() {
        let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        let p = to_point(&x);
        let i = cset_generators(1, 2).unwrap();
        let tops = MapSearch::new(&i.source, &p.source).all();
        let bottoms = MapSearch::new(&i.target, &p.target).all();
        let mut expected = 0;
        for t in &tops {
            for b in &bottoms {
                if compose_maps(&p.map, t) == compose_maps(b, &i.map) {
                    expected += 1;
                }
            }
        }
        let squares = enumerate_squares(&i, &p).unwrap();
        assert_eq!(squares.len(), expected);
        assert!(squares.iter().all(|s| LiftingProblem { i: &i, p: &p, square: s.clone() }.commutes()));
    }

    #[test]
    fn isomorphisms_lift() {
        let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        let iso = Arrow::identity(x.clone());
        for i in [cset_generators(1, 2).unwrap(), cset_acyclic_generators(1, 0, 2).unwrap()] {
            assert!(has_rlp(&iso, &i).unwrap().holds);
        }
        let p = to_point(&x);
        assert!(has_rlp(&p, &Arrow::identity(representable_cyclic(1, 2).unwrap())).unwrap().holds);
    }

    #[test]
    fn point_against_boundary_is_decided() {
        let p = to_point(&representable_cyclic(0, 2).unwrap());
        let i = cset_generators(1, 2).unwrap();
        let verdict = has_rlp(&p, &i).unwrap();
        if let Some(square) = &verdict.witness {
            let problem = LiftingProblem { i: &i, p: &p, square: square.clone() };
            assert!(problem.commutes());
            assert!(problem.solve().is_none());
        }
    }

    #[test]
    fn solutions_are_lifts() {
        let x = representable_cyclic(1, 2).unwrap();
        let p = to_point(&x);
        let i = cset_acyclic_generators(1, 1, 2).unwrap();
        for square in enumerate_squares(&i, &p).unwrap() {
            let problem = LiftingProblem { i: &i, p: &p, square };
            if let Some(lift) = problem.solve() {
                assert!(problem.is_lift(&lift));
            }
        }
    }

    #[test]
    fn identity_is_an_acyclic_fibration() {
        let x = cyclic_nerve(&[vec![0, 1], vec![1, 0]], 3).unwrap();
        let id = Arrow::identity(x.clone());
        assert!(is_acyclic_fibration_up_to(&id, 2).unwrap().holds);
        assert!(is_fibration_up_to(&id, 2).unwrap().holds);
        assert!(is_fibration_up_to(&id, 3).is_err());
        assert_eq!(id.map, identity_map(&x));
    }
}
