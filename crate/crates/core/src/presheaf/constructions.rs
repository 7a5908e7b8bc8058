//! Representables and the cyclic sets built from them.

use serde::Serialize;

use super::colimit::{colimit, generated_subobject, Colimit, Diagram};
use super::{Arrow, FinCyclicSet, FinPresheaf, FinSimplicialSet, PresheafMap};
use crate::delta::{degeneracy, enumerate_monotone, face, OrdinalMap};
use crate::error::{Error, Result};
use crate::lambda::{
    canonical_factor, compose_cyclic, cyclic_degeneracy, cyclic_face, enumerate_hom, iota, tau, CyclicMap,
};
use crate::segal::Triangulation;

/// Elements of `Λ[n]` by level: `Hom(⟨k⟩, ⟨n⟩)` for `k ≤ truncation`.
pub fn representable_cyclic_elements(n: usize, truncation: usize) -> Result<Vec<Vec<CyclicMap>>> {
    (0..=truncation).map(|k| enumerate_hom(k, n)).collect()
}

/// Elements of `Δ[n]` by level.
pub fn representable_simplicial_elements(n: usize, truncation: usize) -> Result<Vec<Vec<OrdinalMap>>> {
    (0..=truncation).map(|k| enumerate_monotone(k, n)).collect()
}

fn position<T: Ord + std::fmt::Debug>(level: &[T], x: &T) -> usize {
    level.binary_search(x).unwrap_or_else(|_| panic!("{x:?} missing from its hom-set"))
}

/// `Λ[n]` truncated at `truncation`; operators act by precomposition.
pub fn representable_cyclic(n: usize, truncation: usize) -> Result<FinCyclicSet> {
    let levels = representable_cyclic_elements(n, truncation)?;
    let pre = |k: usize, g: &CyclicMap| -> Vec<usize> {
        levels[k].iter().map(|x| position(&levels[g.src()], &compose_cyclic(x, g).expect("composable"))).collect()
    };
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    let mut t = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        d.push(if k == 0 { vec![] } else { (0..=k).map(|i| pre(k, &cyclic_face(k, i).unwrap())).collect() });
        s.push(if k == truncation {
            vec![]
        } else {
            (0..=k).map(|i| pre(k, &cyclic_degeneracy(k, i).unwrap())).collect()
        });
        t.push(pre(k, &tau(k)));
    }
    let card = levels.iter().map(Vec::len).collect();
    Ok(FinCyclicSet::new_unchecked(truncation, card, d, s, t))
}

/// `Δ[n]` truncated at `truncation`.
pub fn representable_simplicial(n: usize, truncation: usize) -> Result<FinSimplicialSet> {
    let levels = representable_simplicial_elements(n, truncation)?;
    let pre = |k: usize, g: &OrdinalMap| -> Vec<usize> {
        levels[k]
            .iter()
            .map(|x| position(&levels[g.src()], &crate::delta::compose_ordinal(x, g).expect("composable")))
            .collect()
    };
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        d.push(if k == 0 { vec![] } else { (0..=k).map(|i| pre(k, &face(k, i).unwrap())).collect() });
        s.push(if k == truncation { vec![] } else { (0..=k).map(|i| pre(k, &degeneracy(k, i).unwrap())).collect() });
    }
    let card = levels.iter().map(Vec::len).collect();
    Ok(FinSimplicialSet::new_unchecked(truncation, card, d, s))
}

/// `Λ[a] → Λ[b]`, postcomposition with `φ : ⟨a⟩ → ⟨b⟩`.
pub fn yoneda_cyclic(phi: &CyclicMap, truncation: usize) -> Result<PresheafMap> {
    let src = representable_cyclic_elements(phi.src(), truncation)?;
    let tgt = representable_cyclic_elements(phi.tgt(), truncation)?;
    Ok(PresheafMap::new(
        src.iter()
            .zip(&tgt)
            .map(|(sl, tl)| sl.iter().map(|x| position(tl, &compose_cyclic(phi, x).expect("composable"))).collect())
            .collect(),
    ))
}

/// `Δ[a] → Δ[b]`, postcomposition with `f : [a] → [b]`.
pub fn yoneda_simplicial(f: &OrdinalMap, truncation: usize) -> Result<PresheafMap> {
    let src = representable_simplicial_elements(f.src(), truncation)?;
    let tgt = representable_simplicial_elements(f.tgt(), truncation)?;
    Ok(PresheafMap::new(
        src.iter()
            .zip(&tgt)
            .map(|(sl, tl)| {
                sl.iter().map(|x| position(tl, &crate::delta::compose_ordinal(f, x).expect("composable"))).collect()
            })
            .collect(),
    ))
}

fn faces_subobject(n: usize, omit: Option<usize>, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    if n > truncation {
        return Err(Error::TruncationExceeded { degree: n, truncation });
    }
    let rep = representable_cyclic(n, truncation)?;
    if n == 0 {
        return generated_subobject(&rep, &[]);
    }
    let level = enumerate_hom(n - 1, n)?;
    let seeds: Vec<(usize, usize)> =
        (0..=n).filter(|&i| Some(i) != omit).map(|i| (n - 1, position(&level, &cyclic_face(n, i).unwrap()))).collect();
    generated_subobject(&rep, &seeds)
}

/// `∂Λ[n] ↪ Λ[n]`, generated by the faces `ι(δ_i)`. For `n = 0` the
/// boundary is empty.
pub fn boundary_faces(n: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    faces_subobject(n, None, truncation)
}

/// `Λ[n,k] ↪ Λ[n]`, generated by the faces other than `ι(δ_k)`.
pub fn cyclic_horn(n: usize, k: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    if n == 0 || k > n {
        return Err(Error::IndexOutOfRange { what: "horn", index: k, bound: n });
    }
    faces_subobject(n, Some(k), truncation)
}

fn is_plus(phi: &CyclicMap) -> bool {
    canonical_factor(phi).delta.is_injective()
}

/// The comparison `colim_{u : ⟨m⟩ → ⟨n⟩} Λ[m] → Λ[n]` over the
/// non-invertible degree-raising maps into `⟨n⟩`.
pub fn boundary_latch(n: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    let mut index: Vec<CyclicMap> = Vec::new();
    for m in 0..n {
        index.extend(enumerate_hom(m, n)?.into_iter().filter(is_plus));
    }
    let reps: Vec<FinCyclicSet> = (0..n).map(|m| representable_cyclic(m, truncation)).collect::<Result<_>>()?;
    let mut arrow_maps = Vec::new();
    let mut arrow_ends = Vec::new();
    for (target, u_prime) in index.iter().enumerate() {
        for m in 0..=u_prime.src() {
            for w in enumerate_hom(m, u_prime.src())?.into_iter().filter(is_plus) {
                let u = compose_cyclic(u_prime, &w)?;
                let source = index.binary_search(&u).expect("plus maps compose");
                arrow_ends.push((source, target));
                arrow_maps.push(yoneda_cyclic(&w, truncation)?);
            }
        }
    }
    let diagram = Diagram {
        objects: index.iter().map(|u| &reps[u.src()]).collect(),
        arrows: arrow_ends.iter().zip(&arrow_maps).map(|(&(a, b), m)| (a, b, m)).collect(),
    };
    let colim = colimit(truncation, &diagram)?;
    let cocone: Vec<PresheafMap> = index.iter().map(|u| yoneda_cyclic(u, truncation)).collect::<Result<_>>()?;
    let map = colim.induced(&cocone)?;
    Ok(Arrow { source: colim.object, target: representable_cyclic(n, truncation)?, map })
}

/// `Γ(n) → Λ[n]`: `n` copies of `Λ[1]` glued end to end along `Λ[0]`.
pub fn spine(n: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    let colim = spine_colimit(n, truncation)?;
    let mut cocone = Vec::with_capacity(2 * n + 1);
    for k in 0..n {
        let edge = OrdinalMap::new(1, n, vec![k as i64, k as i64 + 1])?;
        cocone.push(yoneda_cyclic(&iota(&edge), truncation)?);
    }
    for j in 0..=n {
        let vertex = OrdinalMap::new(0, n, vec![j as i64])?;
        cocone.push(yoneda_cyclic(&iota(&vertex), truncation)?);
    }
    let map = colim.induced(&cocone)?;
    Ok(Arrow { source: colim.object, target: representable_cyclic(n, truncation)?, map })
}

fn spine_colimit(n: usize, truncation: usize) -> Result<Colimit<FinCyclicSet>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { what: "spine length", index: n, bound: 1 });
    }
    let edge = representable_cyclic(1, truncation)?;
    let point = representable_cyclic(0, truncation)?;
    let source_vertex = yoneda_cyclic(&cyclic_face(1, 1)?, truncation)?;
    let target_vertex = yoneda_cyclic(&cyclic_face(1, 0)?, truncation)?;
    let mut objects: Vec<&FinCyclicSet> = vec![&edge; n];
    objects.extend(std::iter::repeat_n(&point, n + 1));
    let mut arrows = Vec::new();
    for k in 0..n {
        arrows.push((n + k, k, &source_vertex));
        arrows.push((n + k + 1, k, &target_vertex));
    }
    colimit(truncation, &Diagram { objects, arrows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Simplicial,
    Cyclic,
}

/// An arrow of either flavor.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FlavoredArrow {
    Simplicial(Arrow<FinSimplicialSet>),
    Cyclic(Arrow<FinCyclicSet>),
}

/// `Δ[𝒯] ↪ Δ[n]` or `Λ[𝒯] ↪ Λ[n]`, generated by the triangles of `𝒯`.
pub fn triangulation_object(t: &Triangulation, flavor: Flavor, truncation: usize) -> Result<FlavoredArrow> {
    if truncation < 2 {
        return Err(Error::TruncationExceeded { degree: 2, truncation });
    }
    let n = t.n();
    let triangles: Vec<OrdinalMap> = t
        .triangles()
        .iter()
        .map(|&[a, b, c]| OrdinalMap::new(2, n, vec![a as i64, b as i64, c as i64]))
        .collect::<Result<_>>()?;
    Ok(match flavor {
        Flavor::Simplicial => {
            let level = enumerate_monotone(2, n)?;
            let seeds: Vec<_> = triangles.iter().map(|f| (2, position(&level, f))).collect();
            FlavoredArrow::Simplicial(generated_subobject(&representable_simplicial(n, truncation)?, &seeds)?)
        }
        Flavor::Cyclic => {
            let level = enumerate_hom(2, n)?;
            let seeds: Vec<_> = triangles.iter().map(|f| (2, position(&level, &iota(f)))).collect();
            FlavoredArrow::Cyclic(generated_subobject(&representable_cyclic(n, truncation)?, &seeds)?)
        }
    })
}

/// `j_! Y` as a colimit of representables over the simplices of `Y`.
///
/// Only simplices up to the truncation of `Y` enter, so this is the
/// extension of that skeleton of `Y`.
#[derive(Debug, Clone)]
pub struct KanExtension {
    pub colimit: Colimit<FinCyclicSet>,
    /// `cells[i] = (dimension, element)` indexes the diagram objects.
    pub cells: Vec<(usize, usize)>,
}

impl KanExtension {
    pub fn object(&self) -> &FinCyclicSet {
        &self.colimit.object
    }
}

pub fn kan_extend(y: &FinSimplicialSet, truncation: usize) -> Result<KanExtension> {
    const LIMIT: usize = 200_000;
    let top = y.truncation();
    let reps: Vec<FinCyclicSet> = (0..=top).map(|k| representable_cyclic(k, truncation)).collect::<Result<_>>()?;
    let needed: usize = (0..=top).map(|k| y.card(k) * reps[k].total_size()).sum();
    if needed > LIMIT {
        return Err(Error::ResourceLimit {
            what: "Kan extension elements",
            needed: needed as u128,
            limit: LIMIT as u128,
        });
    }
    let mut cells = Vec::new();
    let mut offset = Vec::with_capacity(top + 1);
    for k in 0..=top {
        offset.push(cells.len());
        cells.extend((0..y.card(k)).map(|e| (k, e)));
    }
    let face_maps: Vec<Vec<PresheafMap>> = (0..=top)
        .map(|k| {
            if k == 0 {
                Ok(vec![])
            } else {
                (0..=k).map(|i| yoneda_cyclic(&cyclic_face(k, i)?, truncation)).collect()
            }
        })
        .collect::<Result<_>>()?;
    let degeneracy_maps: Vec<Vec<PresheafMap>> = (0..top)
        .map(|k| (0..=k).map(|i| yoneda_cyclic(&cyclic_degeneracy(k, i)?, truncation)).collect())
        .collect::<Result<_>>()?;
    let mut arrows = Vec::new();
    for k in 0..=top {
        for e in 0..y.card(k) {
            let here = offset[k] + e;
            if k > 0 {
                for (i, m) in face_maps[k].iter().enumerate() {
                    arrows.push((offset[k - 1] + y.d(k, i)[e], here, m));
                }
            }
            if k < top {
                for (i, m) in degeneracy_maps[k].iter().enumerate() {
                    arrows.push((offset[k + 1] + y.s(k, i)[e], here, m));
                }
            }
        }
    }
    let objects = cells.iter().map(|&(k, _)| &reps[k]).collect();
    let colimit = colimit(truncation, &Diagram { objects, arrows })?;
    Ok(KanExtension { colimit, cells })
}
