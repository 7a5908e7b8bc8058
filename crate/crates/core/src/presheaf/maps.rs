//! Natural transformations: composition, naturality checks and exhaustive
//! search by levelwise backtracking.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::{FinPresheaf, PresheafMap};

pub fn identity_map<P: FinPresheaf>(x: &P) -> PresheafMap {
    PresheafMap::new(x.cards().iter().map(|&c| (0..c).collect()).collect())
}

/// `g ∘ f`.
pub fn compose_maps(g: &PresheafMap, f: &PresheafMap) -> PresheafMap {
    PresheafMap::new(f.levels.iter().zip(&g.levels).map(|(fl, gl)| fl.iter().map(|&x| gl[x]).collect()).collect())
}

/// Shapes agree and every operator commutes with the map.
pub fn is_natural<P: FinPresheaf>(source: &P, target: &P, map: &PresheafMap) -> bool {
    if source.truncation() != target.truncation() || map.levels.len() != source.truncation() + 1 {
        return false;
    }
    for n in 0..=source.truncation() {
        if map.levels[n].len() != source.card(n) || map.levels[n].iter().any(|&v| v >= target.card(n)) {
            return false;
        }
    }
    let (src_ops, tgt_ops) = (source.operators(), target.operators());
    src_ops
        .iter()
        .zip(&tgt_ops)
        .all(|(a, b)| a.table.iter().enumerate().all(|(x, &ax)| map.levels[a.to][ax] == b.table[map.levels[a.from][x]]))
}

type Filter<'a> = Box<dyn Fn(usize, usize, usize) -> bool + 'a>;

/// Backtracking search for maps `source → target`.
///
/// Elements are assigned level by level. An element hit by an operator from
/// a lower level has a forced value; otherwise candidates are looked up by
/// the values already fixed on its lower faces. Optional pinned values and a
/// per-element filter `(level, element, candidate)` restrict the search.
pub struct MapSearch<'a, P: FinPresheaf> {
    source: &'a P,
    target: &'a P,
    pinned: Option<Vec<Vec<Option<usize>>>>,
    filter: Option<Filter<'a>>,
}

struct Plan {
    order: Vec<(usize, usize)>,
    /// For each element: lower operators into it, as `(op, preimage)`.
    forced: Vec<Vec<Vec<(usize, usize)>>>,
    /// Operators leaving each level for a strictly lower level.
    down: Vec<Vec<usize>>,
    /// Operators from a level to itself.
    same: Vec<Vec<usize>>,
    /// Same-level preimages: `(op, preimage)` with `op(preimage) = x`.
    same_pre: Vec<Vec<Vec<(usize, usize)>>>,
    /// Target elements grouped by the values of their down operators.
    index: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl<'a, P: FinPresheaf> MapSearch<'a, P> {
    pub fn new(source: &'a P, target: &'a P) -> Self {
        MapSearch { source, target, pinned: None, filter: None }
    }

    /// Fixes the value of some elements in advance.
    pub fn pinned(mut self, pinned: Vec<Vec<Option<usize>>>) -> Self {
        self.pinned = Some(pinned);
        self
    }

    pub fn filter(mut self, filter: impl Fn(usize, usize, usize) -> bool + 'a) -> Self {
        self.filter = Some(Box::new(filter));
        self
    }

    fn plan(&self) -> Plan {
        let top = self.source.truncation();
        let src_ops = self.source.operators();
        let tgt_ops = self.target.operators();
        let mut forced: Vec<Vec<Vec<(usize, usize)>>> =
            (0..=top).map(|n| vec![Vec::new(); self.source.card(n)]).collect();
        let mut same_pre = forced.clone();
        let mut down = vec![Vec::new(); top + 1];
        let mut same = vec![Vec::new(); top + 1];
        for (k, op) in src_ops.iter().enumerate() {
            if op.to > op.from {
                for (w, &x) in op.table.iter().enumerate() {
                    forced[op.to][x].push((k, w));
                }
            } else if op.to < op.from {
                down[op.from].push(k);
            } else {
                same[op.from].push(k);
                for (w, &x) in op.table.iter().enumerate() {
                    same_pre[op.to][x].push((k, w));
                }
            }
        }
        let index = (0..=top)
            .map(|n| {
                let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                for y in 0..self.target.card(n) {
                    let key = down[n].iter().map(|&k| tgt_ops[k].table[y]).collect();
                    groups.entry(key).or_default().push(y);
                }
                groups
            })
            .collect();
        let order = (0..=top).flat_map(|n| (0..self.source.card(n)).map(move |x| (n, x))).collect();
        Plan { order, forced, down, same, same_pre, index }
    }

    /// Visits every map until the visitor breaks. Returns the number visited.
    pub fn for_each(&self, mut visit: impl FnMut(&PresheafMap) -> ControlFlow<()>) -> u128 {
        let top = self.source.truncation();
        if self.target.truncation() != top {
            return 0;
        }
        let plan = self.plan();
        let src_ops = self.source.operators();
        let tgt_ops = self.target.operators();
        const UNSET: usize = usize::MAX;
        let mut map = PresheafMap::new((0..=top).map(|n| vec![UNSET; self.source.card(n)]).collect());
        let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); plan.order.len()];
        let mut cursor: Vec<usize> = vec![0; plan.order.len()];
        let mut visited: u128 = 0;

        let compute = |map: &PresheafMap, n: usize, x: usize| -> Vec<usize> {
            let mut forced_value = None;
            for &(k, w) in &plan.forced[n][x] {
                let v = tgt_ops[k].table[map.levels[src_ops[k].from][w]];
                match forced_value {
                    None => forced_value = Some(v),
                    Some(prev) if prev != v => return Vec::new(),
                    _ => {}
                }
            }
            let pinned = self.pinned.as_ref().and_then(|p| p.get(n)).and_then(|l| l.get(x)).copied().flatten();
            match (forced_value, pinned) {
                (Some(a), Some(b)) if a != b => return Vec::new(),
                (None, Some(b)) => forced_value = Some(b),
                _ => {}
            }
            let key: Vec<usize> =
                plan.down[n].iter().map(|&k| map.levels[src_ops[k].to][src_ops[k].table[x]]).collect();
            let Some(group) = plan.index[n].get(&key) else {
                return Vec::new();
            };
            match forced_value {
                Some(v) if group.binary_search(&v).is_ok() => vec![v],
                Some(_) => Vec::new(),
                None => group.clone(),
            }
        };

        let consistent = |map: &PresheafMap, n: usize, x: usize, y: usize| -> bool {
            if let Some(f) = &self.filter {
                if !f(n, x, y) {
                    return false;
                }
            }
            let value = |z: usize| if z == x { y } else { map.levels[n][z] };
            for &k in &plan.same[n] {
                let fo = value(src_ops[k].table[x]);
                if fo != UNSET && fo != tgt_ops[k].table[y] {
                    return false;
                }
            }
            for &(k, w) in &plan.same_pre[n][x] {
                let fw = value(w);
                if fw != UNSET && tgt_ops[k].table[fw] != y {
                    return false;
                }
            }
            true
        };

        let len = plan.order.len();
        if len == 0 {
            let _ = visit(&map);
            return 1;
        }
        let mut depth = 0;
        let (n0, x0) = plan.order[0];
        candidates[0] = compute(&map, n0, x0);
        cursor[0] = 0;
        loop {
            let (n, x) = plan.order[depth];
            if cursor[depth] >= candidates[depth].len() {
                map.levels[n][x] = UNSET;
                if depth == 0 {
                    return visited;
                }
                depth -= 1;
                let (pn, px) = plan.order[depth];
                map.levels[pn][px] = UNSET;
                cursor[depth] += 1;
                continue;
            }
            let y = candidates[depth][cursor[depth]];
            map.levels[n][x] = UNSET;
            if !consistent(&map, n, x, y) {
                cursor[depth] += 1;
                continue;
            }
            map.levels[n][x] = y;
            if depth + 1 == len {
                visited += 1;
                if visit(&map).is_break() {
                    return visited;
                }
                cursor[depth] += 1;
                continue;
            }
            depth += 1;
            let (nn, nx) = plan.order[depth];
            candidates[depth] = compute(&map, nn, nx);
            cursor[depth] = 0;
        }
    }

    pub fn count(&self) -> u128 {
        self.for_each(|_| ControlFlow::Continue(()))
    }

    pub fn first(&self) -> Option<PresheafMap> {
        let mut found = None;
        self.for_each(|m| {
            found = Some(m.clone());
            ControlFlow::Break(())
        });
        found
    }

    /// All maps, in the search order (lexicographic on the level tables).
    pub fn all(&self) -> Vec<PresheafMap> {
        let mut out = Vec::new();
        self.for_each(|m| {
            out.push(m.clone());
            ControlFlow::Continue(())
        });
        out
    }
}
