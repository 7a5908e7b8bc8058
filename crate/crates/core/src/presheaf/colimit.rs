//! Subobjects and finite colimits, computed levelwise on sets.

use std::collections::VecDeque;

use super::{Arrow, FinPresheaf, PresheafMap};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A finite diagram: objects plus arrows `(source index, target index, map)`.
#[derive(Debug, Clone)]
pub struct Diagram<'a, P> {
    pub objects: Vec<&'a P>,
    pub arrows: Vec<(usize, usize, &'a PresheafMap)>,
}

/// A colimit with its legs; `representatives[n][c]` is some `(object,
/// element)` in class `c`.
#[derive(Debug, Clone)]
pub struct Colimit<P> {
    pub object: P,
    pub legs: Vec<PresheafMap>,
    pub representatives: Vec<Vec<(usize, usize)>>,
}

impl<P: FinPresheaf> Colimit<P> {
    /// The map out of the colimit induced by a cocone. Fails if the cocone
    /// does not respect the identifications.
    pub fn induced(&self, cocone: &[PresheafMap]) -> Result<PresheafMap> {
        let top = self.object.truncation();
        let mut levels = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut level = Vec::with_capacity(self.object.card(n));
            for &(obj, x) in &self.representatives[n] {
                level.push(cocone[obj].levels[n][x]);
            }
            for (obj, leg) in self.legs.iter().enumerate() {
                for (x, &c) in leg.levels[n].iter().enumerate() {
                    if cocone[obj].levels[n][x] != level[c] {
                        return Err(Error::InvalidMap(format!(
                            "cocone leg {obj} does not respect identifications at level {n}"
                        )));
                    }
                }
            }
            levels.push(level);
        }
        Ok(PresheafMap::new(levels))
    }
}

/// Levelwise quotient of the disjoint union by the arrows. Classes are
/// numbered by their least member in disjoint-union order.
pub fn colimit<P: FinPresheaf>(truncation: usize, diagram: &Diagram<'_, P>) -> Result<Colimit<P>> {
    if let Some(bad) = diagram.objects.iter().find(|o| o.truncation() != truncation) {
        return Err(Error::InvalidMap(format!(
            "diagram object has truncation {} instead of {truncation}",
            bad.truncation()
        )));
    }
    let obj_ops: Vec<_> = diagram.objects.iter().map(|o| o.operators()).collect();
    let mut cards = Vec::with_capacity(truncation + 1);
    let mut labels = Vec::with_capacity(truncation + 1);
    let mut offsets = Vec::with_capacity(truncation + 1);
    let mut representatives = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let mut off = Vec::with_capacity(diagram.objects.len());
        let mut total = 0;
        for o in &diagram.objects {
            off.push(total);
            total += o.card(n);
        }
        let mut uf = UnionFind::new(total);
        for &(a, b, map) in &diagram.arrows {
            for (x, &y) in map.levels[n].iter().enumerate() {
                uf.union(off[a] + x, off[b] + y);
            }
        }
        let (label, count) = uf.classes();
        let mut reps = vec![(usize::MAX, 0); count];
        for (obj, &start) in off.iter().enumerate() {
            for x in 0..diagram.objects[obj].card(n) {
                let c = label[start + x];
                if reps[c].0 == usize::MAX {
                    reps[c] = (obj, x);
                }
            }
        }
        cards.push(count);
        labels.push(label);
        offsets.push(off);
        representatives.push(reps);
    }
    // operator shapes depend only on the truncation
    let template = P::empty(truncation);
    let mut tables = Vec::new();
    for (k, shape) in template.operators().iter().enumerate() {
        let (from, to) = (shape.from, shape.to);
        let table = representatives[from]
            .iter()
            .map(|&(obj, x)| labels[to][offsets[to][obj] + obj_ops[obj][k].table[x]])
            .collect();
        tables.push(table);
    }
    let object = P::from_operator_tables(truncation, cards, tables);
    let legs = (0..diagram.objects.len())
        .map(|obj| {
            PresheafMap::new(
                (0..=truncation)
                    .map(|n| (0..diagram.objects[obj].card(n)).map(|x| labels[n][offsets[n][obj] + x]).collect())
                    .collect(),
            )
        })
        .collect();
    Ok(Colimit { object, legs, representatives })
}

/// Pushout of `A ← C → B`; legs are `[A, B]`.
pub fn pushout<P: FinPresheaf>(c: &P, a: &P, f: &PresheafMap, b: &P, g: &PresheafMap) -> Result<Colimit<P>> {
    if !super::is_natural(c, a, f) || !super::is_natural(c, b, g) {
        return Err(Error::InvalidMap("pushout legs are not natural maps out of the shared source".into()));
    }
    let diagram = Diagram { objects: vec![a, b, c], arrows: vec![(2, 0, f), (2, 1, g)] };
    let mut out = colimit(c.truncation(), &diagram)?;
    out.legs.truncate(2);
    Ok(out)
}

/// The subobject on the elements marked `keep`, which must be closed under
/// every operator.
pub fn restrict<P: FinPresheaf>(x: &P, keep: &[Vec<bool>]) -> Result<Arrow<P>> {
    let top = x.truncation();
    let new_index: Vec<Vec<usize>> = keep
        .iter()
        .map(|level| {
            let mut next = 0;
            level
                .iter()
                .map(|&k| {
                    if k {
                        next += 1;
                        next - 1
                    } else {
                        usize::MAX
                    }
                })
                .collect()
        })
        .collect();
    let mut tables = Vec::new();
    for op in x.operators() {
        let mut table = Vec::new();
        for (e, &v) in op.table.iter().enumerate() {
            if keep[op.from][e] {
                if !keep[op.to][v] {
                    return Err(Error::InvalidMap(format!("subset not closed under {:?}", op.label)));
                }
                table.push(new_index[op.to][v]);
            }
        }
        tables.push(table);
    }
    let card: Vec<usize> = keep.iter().map(|l| l.iter().filter(|&&k| k).count()).collect();
    let source = P::from_operator_tables(top, card, tables);
    let map = PresheafMap::new(
        keep.iter().map(|l| l.iter().enumerate().filter(|(_, &k)| k).map(|(e, _)| e).collect()).collect(),
    );
    Ok(Arrow { source, target: x.clone(), map })
}

/// Smallest subobject containing the seeds `(level, element)`.
pub fn generated_subobject<P: FinPresheaf>(x: &P, seeds: &[(usize, usize)]) -> Result<Arrow<P>> {
    let top = x.truncation();
    let mut keep: Vec<Vec<bool>> = (0..=top).map(|n| vec![false; x.card(n)]).collect();
    let ops = x.operators();
    let mut by_level = vec![Vec::new(); top + 1];
    for op in &ops {
        by_level[op.from].push(*op);
    }
    let mut queue = VecDeque::new();
    for &(n, e) in seeds {
        if n > top || e >= x.card(n) {
            return Err(Error::IndexOutOfRange { what: "seed", index: e, bound: if n > top { 0 } else { x.card(n) } });
        }
        if !keep[n][e] {
            keep[n][e] = true;
            queue.push_back((n, e));
        }
    }
    while let Some((n, e)) = queue.pop_front() {
        for op in &by_level[n] {
            let v = op.table[e];
            if !keep[op.to][v] {
                keep[op.to][v] = true;
                queue.push_back((op.to, v));
            }
        }
    }
    restrict(x, &keep)
}
