//! The generalized Reedy structure on Λ: degree-raising and degree-lowering
//! maps, factorizations, and latching and matching objects of cyclic sets
//! with their cyclic group actions.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lambda::{canonical_factor, compose_cyclic, enumerate_hom, iota, tau, tau_power, CyclicMap};
use crate::presheaf::{boundary_faces, cyclic_horn, Arrow, FinCyclicSet};
use crate::report::{AxiomCheck, Check};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReedyClass {
    Plus,
    Minus,
    Iso,
    Neither,
}

impl ReedyClass {
    pub fn is_plus(self) -> bool {
        matches!(self, ReedyClass::Plus | ReedyClass::Iso)
    }

    pub fn is_minus(self) -> bool {
        matches!(self, ReedyClass::Minus | ReedyClass::Iso)
    }

    fn from_flags(plus: bool, minus: bool) -> Self {
        match (plus, minus) {
            (true, true) => ReedyClass::Iso,
            (true, false) => ReedyClass::Plus,
            (false, true) => ReedyClass::Minus,
            (false, false) => ReedyClass::Neither,
        }
    }
}

/// Plus when the Δ-part of the canonical factorization is injective, Minus
/// when it is surjective.
pub fn classify(phi: &CyclicMap) -> ReedyClass {
    let delta = canonical_factor(phi).delta;
    ReedyClass::from_flags(delta.is_injective(), delta.is_surjective())
}

/// Plus when the degree does not drop, Minus when it does not rise.
pub fn classify_by_degree(phi: &CyclicMap) -> ReedyClass {
    ReedyClass::from_flags(phi.src() <= phi.tgt(), phi.src() >= phi.tgt())
}

/// `φ = φ⁺ ∘ φ⁻` through `⟨r⟩`, `r + 1` the number of values of the Δ-part;
/// the rotation sits in `φ⁻`.
pub fn reedy_factor(phi: &CyclicMap) -> (CyclicMap, CyclicMap) {
    let pair = canonical_factor(phi);
    let (epi, mono) = pair.delta.epi_mono();
    let minus = compose_cyclic(&iota(&epi), &tau_power(phi.src(), pair.rot as i64)).expect("degrees match");
    (iota(&mono), minus)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReedyReport {
    pub max_degree: usize,
    pub axioms: Vec<AxiomCheck>,
    pub pass: bool,
}

fn morphism_json(f: &CyclicMap) -> Value {
    serde_json::to_value(f).expect("maps serialize")
}

/// Automorphisms `θ` of the source with `f ∘ θ = f`.
pub fn fixing_automorphisms(f: &CyclicMap) -> Vec<CyclicMap> {
    let n = f.src();
    (0..=n as i64)
        .map(|k| tau_power(n, k))
        .filter(|theta| &compose_cyclic(f, theta).expect("degrees match") == f)
        .collect()
}

/// Checks the four generalized Reedy axioms, plus closure of the two
/// classes under composition, for all maps between degrees `≤ max_degree`.
pub fn verify_generalized_reedy(
    max_degree: usize,
    classifier: &dyn Fn(&CyclicMap) -> ReedyClass,
) -> Result<ReedyReport> {
    let top = max_degree;
    let mut hom: Vec<Vec<Vec<CyclicMap>>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        hom.push((0..=top).map(|m| enumerate_hom(n, m)).collect::<Result<_>>()?);
    }
    let class: HashMap<&CyclicMap, ReedyClass> = hom.iter().flatten().flatten().map(|f| (f, classifier(f))).collect();

    let mut closure = Check::new("classes closed under composition");
    for n in 0..=top {
        for k in 0..=top {
            for m in 0..=top {
                for f in &hom[n][k] {
                    for g in &hom[k][m] {
                        let (cf, cg) = (class[f], class[g]);
                        if !(cf.is_plus() && cg.is_plus()) && !(cf.is_minus() && cg.is_minus()) {
                            continue;
                        }
                        let c = class[&compose_cyclic(g, f)?];
                        let ok = (!(cf.is_plus() && cg.is_plus()) || c.is_plus())
                            && (!(cf.is_minus() && cg.is_minus()) || c.is_minus());
                        closure.record(ok, || json!({ "g": morphism_json(g), "f": morphism_json(f) }));
                    }
                }
            }
        }
    }

    let mut degrees = Check::new("1: degree behaviour");
    let mut intersection = Check::new("2: plus and minus meet in the isomorphisms");
    for f in hom.iter().flatten().flatten() {
        let c = class[f];
        let (n, m, iso) = (f.src(), f.tgt(), f.is_automorphism());
        let ok = (iso || !c.is_plus() || m > n) && (iso || !c.is_minus() || m < n) && (!iso || n == m);
        degrees.record(ok, || morphism_json(f));
        intersection.record((c == ReedyClass::Iso) == iso, || morphism_json(f));
    }

    let mut factorization = Check::new("3: factorization unique up to isomorphism");
    let mut found: HashMap<CyclicMap, Vec<(CyclicMap, CyclicMap)>> = HashMap::new();
    for n in 0..=top {
        for k in 0..=top {
            for h in hom[n][k].iter().filter(|h| class[h].is_minus()) {
                for m in 0..=top {
                    for g in hom[k][m].iter().filter(|g| class[g].is_plus()) {
                        found.entry(compose_cyclic(g, h)?).or_default().push((g.clone(), h.clone()));
                    }
                }
            }
        }
    }
    let autos: Vec<Vec<CyclicMap>> = (0..=top).map(|k| (0..=k as i64).map(|r| tau_power(k, r)).collect()).collect();
    for f in hom.iter().flatten().flatten() {
        let Some(list) = found.get(f) else {
            factorization.record(false, || json!({ "morphism": morphism_json(f), "problem": "no factorization" }));
            continue;
        };
        let (g0, h0) = &list[0];
        for (g, h) in list {
            let k = h.tgt();
            let thetas = if k != h0.tgt() {
                0
            } else {
                autos[k]
                    .iter()
                    .filter(|theta| {
                        compose_cyclic(theta, h0).ok().as_ref() == Some(h)
                            && compose_cyclic(g, theta).ok().as_ref() == Some(g0)
                    })
                    .count()
            };
            factorization.record(thetas == 1, || {
                json!({
                    "morphism": morphism_json(f),
                    "first": [morphism_json(g0), morphism_json(h0)],
                    "second": [morphism_json(g), morphism_json(h)],
                    "connecting_isomorphisms": thetas,
                })
            });
        }
    }

    let mut isotropy = Check::new("4: minus maps have no fixing automorphisms");
    for f in hom.iter().flatten().flatten().filter(|f| class[f].is_minus()) {
        let fixing = fixing_automorphisms(f);
        isotropy.record(fixing.len() == 1, || {
            json!({ "morphism": morphism_json(f), "fixed_by": fixing.iter().map(morphism_json).collect::<Vec<_>>() })
        });
    }

    let axioms: Vec<AxiomCheck> =
        [closure, degrees, intersection, factorization, isotropy].into_iter().map(Check::finish).collect();
    let pass = axioms.iter().all(|a| a.pass);
    Ok(ReedyReport { max_degree, axioms, pass })
}

/// A finite set with an action of a cyclic group, given by the permutation
/// of its generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GSet {
    pub card: usize,
    pub action: Vec<usize>,
}

impl GSet {
    /// The action table is a permutation of order dividing `order`.
    pub fn is_action_of_order(&self, order: usize) -> bool {
        let mut seen = vec![false; self.card];
        if self.action.len() != self.card
            || self.action.iter().any(|&v| v >= self.card || std::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        (0..self.card).all(|x| (0..order).fold(x, |y, _| self.action[y]) == x)
    }
}

/// `map : source → target` commutes with the generator actions.
pub fn is_equivariant(source: &GSet, target: &GSet, map: &[usize]) -> bool {
    (0..source.card).all(|x| map[source.action[x]] == target.action[map[x]])
}

/// `X_n` with its action by `t_n`.
pub fn level_gset(x: &FinCyclicSet, n: usize) -> GSet {
    GSet { card: x.card(n), action: x.t(n).to_vec() }
}

fn check_level(x: &FinCyclicSet, n: usize) -> Result<()> {
    if n > x.truncation() {
        return Err(Error::TruncationExceeded { degree: n, truncation: x.truncation() });
    }
    Ok(())
}

/// `L_n X`: the colimit of `X_m` over non-invertible Minus maps
/// `u : ⟨n⟩ → ⟨m⟩`, as classes of pairs `(u, y)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Latching {
    pub n: usize,
    pub gset: GSet,
    pub index: Vec<CyclicMap>,
    /// Least pair `(index position, element)` of each class.
    pub representatives: Vec<(usize, usize)>,
    /// `L_n X → X_n`.
    pub comparison: Vec<usize>,
    #[serde(skip)]
    class_of: HashMap<(usize, usize), usize>,
}

impl Latching {
    pub fn class(&self, u: usize, y: usize) -> usize {
        self.class_of[&(u, y)]
    }
}

pub fn latching(x: &FinCyclicSet, n: usize) -> Result<Latching> {
    check_level(x, n)?;
    let mut index = Vec::new();
    for m in 0..n {
        index.extend(enumerate_hom(n, m)?.into_iter().filter(|u| classify(u).is_minus()));
    }
    let position: HashMap<&CyclicMap, usize> = index.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut offsets = Vec::with_capacity(index.len());
    let mut total = 0;
    for u in &index {
        offsets.push(total);
        total += x.card(u.tgt());
    }
    let mut uf = UnionFind::new(total);
    for (a, u) in index.iter().enumerate() {
        for m2 in 0..n {
            for w in enumerate_hom(u.tgt(), m2)? {
                let u2 = compose_cyclic(&w, u)?;
                let Some(&b) = position.get(&u2) else { continue };
                let xw = x.evaluate(&w)?;
                for (y2, &y) in xw.iter().enumerate() {
                    uf.union(offsets[b] + y2, offsets[a] + y);
                }
            }
        }
    }
    let (labels, count) = uf.classes();
    let mut representatives = vec![(usize::MAX, 0); count];
    let mut class_of = HashMap::new();
    let mut comparison = vec![0; count];
    for (a, u) in index.iter().enumerate() {
        let xu = x.evaluate(u)?;
        for y in 0..x.card(u.tgt()) {
            let c = labels[offsets[a] + y];
            class_of.insert((a, y), c);
            if representatives[c].0 == usize::MAX {
                representatives[c] = (a, y);
                comparison[c] = xu[y];
            }
        }
    }
    let t = tau(n);
    let action = representatives
        .iter()
        .map(|&(a, y)| class_of[&(position[&compose_cyclic(&index[a], &t).expect("degrees match")], y)])
        .collect();
    Ok(Latching { n, gset: GSet { card: count, action }, index, representatives, comparison, class_of })
}

/// `M_n X`: the limit of `X_m` over non-invertible Plus maps
/// `u : ⟨m⟩ → ⟨n⟩`, as compatible families `(x_u)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Matching {
    pub n: usize,
    pub gset: GSet,
    pub index: Vec<CyclicMap>,
    /// Families sorted lexicographically, one entry per index map.
    pub families: Vec<Vec<usize>>,
    /// `X_n → M_n X`.
    pub comparison: Vec<usize>,
}

impl Matching {
    pub fn position(&self, family: &[usize]) -> Option<usize> {
        self.families.binary_search_by(|f| f.as_slice().cmp(family)).ok()
    }
}

pub fn matching(x: &FinCyclicSet, n: usize) -> Result<Matching> {
    check_level(x, n)?;
    let mut index = Vec::new();
    for m in 0..n {
        index.extend(enumerate_hom(m, n)?.into_iter().filter(|u| classify(u).is_plus()));
    }
    let position: HashMap<&CyclicMap, usize> = index.iter().enumerate().map(|(i, u)| (u, i)).collect();
    // constraints x_{u∘w} = X(w) x_u, attached to the later of the two slots
    let mut order: Vec<usize> = (0..index.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(index[i].src()), i));
    let rank: Vec<usize> = {
        let mut r = vec![0; index.len()];
        order.iter().enumerate().for_each(|(k, &i)| r[i] = k);
        r
    };
    let mut constraints: Vec<Vec<(usize, usize, Vec<usize>)>> = vec![Vec::new(); index.len()];
    for (a, u) in index.iter().enumerate() {
        for m2 in 0..n {
            for w in enumerate_hom(m2, u.src())? {
                let Some(&b) = position.get(&compose_cyclic(u, &w)?) else { continue };
                let later = if rank[a] >= rank[b] { a } else { b };
                constraints[later].push((a, b, x.evaluate(&w)?));
            }
        }
    }
    let mut families = Vec::new();
    let mut current = vec![usize::MAX; index.len()];
    fn rec(
        depth: usize,
        order: &[usize],
        index: &[CyclicMap],
        x: &FinCyclicSet,
        constraints: &[Vec<(usize, usize, Vec<usize>)>],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(current.clone());
            return;
        }
        let slot = order[depth];
        for v in 0..x.card(index[slot].src()) {
            current[slot] = v;
            if constraints[slot].iter().all(|(a, b, xw)| xw[current[*a]] == current[*b]) {
                rec(depth + 1, order, index, x, constraints, current, out);
            }
        }
        current[slot] = usize::MAX;
    }
    rec(0, &order, &index, x, &constraints, &mut current, &mut families);
    families.sort();
    let t = tau(n);
    let rotate: Vec<usize> = index.iter().map(|u| position[&compose_cyclic(&t, u).expect("degrees match")]).collect();
    let find = |f: &[usize]| families.binary_search_by(|g| g.as_slice().cmp(f)).expect("limit is closed");
    let action = families.iter().map(|f| find(&rotate.iter().map(|&r| f[r]).collect::<Vec<_>>())).collect();
    let restrictions: Vec<Vec<usize>> = index.iter().map(|u| x.evaluate(u)).collect::<Result<_>>()?;
    let comparison = (0..x.card(n)).map(|e| find(&restrictions.iter().map(|r| r[e]).collect::<Vec<_>>())).collect();
    Ok(Matching { n, gset: GSet { card: families.len(), action }, index, families, comparison })
}

/// A map of finite sets with cyclic actions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivariantMap {
    pub source: GSet,
    pub target: GSet,
    pub map: Vec<usize>,
}

impl EquivariantMap {
    pub fn is_equivariant(&self) -> bool {
        is_equivariant(&self.source, &self.target, &self.map)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.card];
        self.map.len() == self.target.card && self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

fn arrow_level(f: &Arrow<FinCyclicSet>, n: usize) -> Result<()> {
    check_level(&f.source, n)?;
    check_level(&f.target, n)
}

/// `X_n ⊔_{L_n X} L_n Y → Y_n`.
pub fn relative_latching(f: &Arrow<FinCyclicSet>, n: usize) -> Result<EquivariantMap> {
    arrow_level(f, n)?;
    let (lx, ly) = (latching(&f.source, n)?, latching(&f.target, n)?);
    let xn = f.source.card(n);
    let mut uf = UnionFind::new(xn + ly.gset.card);
    for (c, &(a, y)) in lx.representatives.iter().enumerate() {
        let m = lx.index[a].tgt();
        uf.union(lx.comparison[c], xn + ly.class(a, f.map.levels[m][y]));
    }
    let (labels, count) = uf.classes();
    let mut action = vec![0; count];
    let mut map = vec![0; count];
    for e in 0..xn {
        action[labels[e]] = labels[f.source.t(n)[e]];
        map[labels[e]] = f.map.levels[n][e];
    }
    for c in 0..ly.gset.card {
        action[labels[xn + c]] = labels[xn + ly.gset.action[c]];
        map[labels[xn + c]] = ly.comparison[c];
    }
    Ok(EquivariantMap { source: GSet { card: count, action }, target: level_gset(&f.target, n), map })
}

/// `X_n → M_n X ×_{M_n Y} Y_n`.
pub fn relative_matching(f: &Arrow<FinCyclicSet>, n: usize) -> Result<EquivariantMap> {
    arrow_level(f, n)?;
    let (mx, my) = (matching(&f.source, n)?, matching(&f.target, n)?);
    let push: Vec<usize> = mx
        .families
        .iter()
        .map(|fam| {
            let image: Vec<usize> = fam.iter().zip(&mx.index).map(|(&v, u)| f.map.levels[u.src()][v]).collect();
            my.position(&image).expect("maps preserve compatible families")
        })
        .collect();
    let mut pairs = Vec::new();
    for (xi, &p) in push.iter().enumerate() {
        for y in 0..f.target.card(n) {
            if my.comparison[y] == p {
                pairs.push((xi, y));
            }
        }
    }
    let lookup: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let yt = f.target.t(n);
    let action = pairs.iter().map(|&(xi, y)| lookup[&(mx.gset.action[xi], yt[y])]).collect();
    let map = (0..f.source.card(n)).map(|e| lookup[&(mx.comparison[e], f.map.levels[n][e])]).collect();
    Ok(EquivariantMap { source: level_gset(&f.source, n), target: GSet { card: pairs.len(), action }, map })
}

/// The generating cofibration `∂Λ[n] → Λ[n]`.
pub fn cset_generators(n: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    boundary_faces(n, truncation)
}

/// The generating acyclic cofibration `Λ[n,k] → Λ[n]`.
pub fn cset_acyclic_generators(n: usize, k: usize, truncation: usize) -> Result<Arrow<FinCyclicSet>> {
    cyclic_horn(n, k, truncation)
}
