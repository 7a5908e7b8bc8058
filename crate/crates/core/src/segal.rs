//! Polygon triangulations and the Segal / 2-Segal conditions for finite
//! simplicial and cyclic sets, checked as bijections of finite sets.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::delta::OrdinalMap;
use crate::error::{Error, Result};
use crate::presheaf::{
    compose_maps, representable_cyclic, representable_simplicial_elements, spine, triangulation_object, FinCyclicSet,
    FinSimplicialSet, Flavor, FlavoredArrow, MapSearch,
};

/// A triangulation of the polygon with vertices `0..=n` whose triangles use
/// only polygon vertices. Triangles are strictly increasing and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriangulation")]
pub struct Triangulation {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriangulation {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

impl TryFrom<RawTriangulation> for Triangulation {
    type Error = Error;

    fn try_from(raw: RawTriangulation) -> Result<Self> {
        Triangulation::new(raw.n, raw.triangles)
    }
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    pub fn new(n: usize, mut triangles: Vec<[usize; 3]>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTriangulation(msg));
        if n < 2 {
            return bad(format!("polygon parameter {n} is below 2"));
        }
        if triangles.len() != n - 1 {
            return bad(format!("{} triangles given, {} expected", triangles.len(), n - 1));
        }
        if let Some(t) = triangles.iter().find(|t| !(t[0] < t[1] && t[1] < t[2] && t[2] <= n)) {
            return bad(format!("triangle {t:?} is not strictly increasing within 0..={n}"));
        }
        triangles.sort_unstable();
        let mut sides: HashMap<(usize, usize), usize> = HashMap::new();
        for &[a, b, c] in &triangles {
            for side in [(a, b), (b, c), (a, c)] {
                *sides.entry(side).or_default() += 1;
            }
        }
        for (&side, &count) in &sides {
            let boundary = side.1 == side.0 + 1 || side == (0, n);
            let expected = if boundary { 1 } else { 2 };
            if count != expected {
                return bad(format!("side {side:?} lies in {count} triangles, {expected} expected"));
            }
        }
        for side in (0..n).map(|i| (i, i + 1)).chain([(0, n)]) {
            if !sides.contains_key(&side) {
                return bad(format!("polygon side {side:?} is not covered"));
            }
        }
        let chords: Vec<_> = sides.keys().copied().collect();
        for (i, &p) in chords.iter().enumerate() {
            if let Some(&q) = chords[i + 1..].iter().find(|&&q| crosses(p, q)) {
                return bad(format!("chords {p:?} and {q:?} cross"));
            }
        }
        Ok(Triangulation { n, triangles })
    }

    /// Parses `"a,b,c;a,b,c;…"`; `n` is the largest vertex.
    pub fn parse(text: &str) -> Result<Self> {
        let triangles = text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|tri| {
                let v: Vec<usize> = tri
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {x:?}"))))
                    .collect::<Result<_>>()?;
                <[usize; 3]>::try_from(v).map_err(|_| Error::Parse(format!("triangle {tri:?} needs three vertices")))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = triangles.iter().flatten().copied().max().unwrap_or(0);
        Triangulation::new(n, triangles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// The fan of triangles `(0, k, k+1)`.
    pub fn fan(n: usize) -> Result<Self> {
        Triangulation::new(n, (1..n).map(|k| [0, k, k + 1]).collect())
    }
}

pub fn catalan(k: u64) -> u128 {
    crate::delta::binomial(2 * k, k) / (k as u128 + 1)
}

/// Every triangulation of the `(n+1)`-gon, sorted.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    const LIMIT: u128 = 1_000_000;
    if n < 2 {
        return Err(Error::InvalidTriangulation(format!("polygon parameter {n} is below 2")));
    }
    let needed = catalan(n as u64 - 1);
    if needed > LIMIT {
        return Err(Error::ResourceLimit { what: "triangulations", needed, limit: LIMIT });
    }
    fn rec(lo: usize, hi: usize) -> Vec<Vec<[usize; 3]>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            let right = rec(k, hi);
            for left in rec(lo, k) {
                for r in &right {
                    let mut all = left.clone();
                    all.push([lo, k, hi]);
                    all.extend_from_slice(r);
                    out.push(all);
                }
            }
        }
        out
    }
    let mut out: Vec<Triangulation> = rec(0, n)
        .into_iter()
        .map(|mut tris| {
            tris.sort_unstable();
            Triangulation { n, triangles: tris }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// How a comparison map `X_n → limit` fails to be a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Bijective,
    NotInjective,
    NotSurjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Two distinct `n`-simplices with the same image.
    Pair([usize; 2]),
    /// A compatible family not in the image.
    Family(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangulation: Option<Vec<[usize; 3]>>,
    pub verdict: VerdictKind,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn is_bijective(&self) -> bool {
        self.verdict == VerdictKind::Bijective
    }
}

/// Compares a map `X_n → limit` against the listed limit elements.
fn compare(n: usize, triangulation: Option<Vec<[usize; 3]>>, image: Vec<Vec<usize>>, limit: &[Vec<usize>]) -> Verdict {
    let mut seen: HashMap<&[usize], usize> = HashMap::new();
    for (x, family) in image.iter().enumerate() {
        if let Some(&y) = seen.get(family.as_slice()) {
            return Verdict {
                n,
                triangulation,
                verdict: VerdictKind::NotInjective,
                witness: Some(Witness::Pair([y, x])),
            };
        }
        seen.insert(family, x);
    }
    match limit.iter().find(|family| !seen.contains_key(family.as_slice())) {
        Some(family) => Verdict {
            n,
            triangulation,
            verdict: VerdictKind::NotSurjective,
            witness: Some(Witness::Family(family.clone())),
        },
        None => Verdict { n, triangulation, verdict: VerdictKind::Bijective, witness: None },
    }
}

fn ordinal(n: usize, images: &[usize]) -> OrdinalMap {
    OrdinalMap::new(images.len() - 1, n, images.iter().map(|&v| v as i64).collect()).expect("increasing images")
}

fn check_level(x: &FinSimplicialSet, n: usize) -> Result<()> {
    if n > x.truncation() {
        return Err(Error::TruncationExceeded { degree: n, truncation: x.truncation() });
    }
    Ok(())
}

/// The spine of each `n`-simplex: its edges `(k, k+1)`.
pub fn segal_map(x: &FinSimplicialSet, n: usize) -> Result<Vec<Vec<usize>>> {
    check_level(x, n)?;
    let edges: Vec<Vec<usize>> = (0..n).map(|k| x.evaluate(&ordinal(n, &[k, k + 1]))).collect::<Result<_>>()?;
    Ok((0..x.card(n)).map(|s| edges.iter().map(|e| e[s]).collect()).collect())
}

/// Chains `(e_0, …, e_{n−1})` in `X_1` with `d_0 e_k = d_1 e_{k+1}`,
/// lexicographically.
pub fn edge_chains(x: &FinSimplicialSet, n: usize) -> Result<Vec<Vec<usize>>> {
    check_level(x, n.max(1))?;
    let (d0, d1) = (x.d(1, 0), x.d(1, 1));
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(n);
    fn rec(d0: &[usize], d1: &[usize], n: usize, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chain.len() == n {
            out.push(chain.clone());
            return;
        }
        for e in 0..d0.len() {
            if chain.last().is_none_or(|&p| d0[p] == d1[e]) {
                chain.push(e);
                rec(d0, d1, n, chain, out);
                chain.pop();
            }
        }
    }
    rec(d0, d1, n, &mut chain, &mut out);
    Ok(out)
}

/// The Segal map `X_n → X_1 ×_{X_0} ⋯ ×_{X_0} X_1` as a bijection test.
pub fn segal_check(x: &FinSimplicialSet, n: usize) -> Result<Verdict> {
    let image = segal_map(x, n)?;
    let chains = edge_chains(x, n)?;
    Ok(compare(n, None, image, &chains))
}

/// Restriction of each `n`-simplex to the triangles of `t`.
pub fn triangulation_map(x: &FinSimplicialSet, t: &Triangulation) -> Result<Vec<Vec<usize>>> {
    check_level(x, t.n())?;
    let parts: Vec<Vec<usize>> =
        t.triangles().iter().map(|tri| x.evaluate(&ordinal(t.n(), tri))).collect::<Result<_>>()?;
    Ok((0..x.card(t.n())).map(|s| parts.iter().map(|p| p[s]).collect()).collect())
}

/// Families `(x_T ∈ X_2)` indexed by the triangles of `t` that agree on
/// shared edges and vertices, lexicographically.
pub fn triangle_families(x: &FinSimplicialSet, t: &Triangulation) -> Result<Vec<Vec<usize>>> {
    check_level(x, 2)?;
    let (d1_0, d1_1) = (x.d(1, 0), x.d(1, 1));
    let faces = [x.d(2, 0), x.d(2, 1), x.d(2, 2)];
    let tris = t.triangles();
    let mut out = Vec::new();
    let mut edge_val: HashMap<(usize, usize), usize> = HashMap::new();
    let mut vertex_val: HashMap<usize, usize> = HashMap::new();
    let mut family = Vec::with_capacity(tris.len());

    struct Ctx<'a> {
        d1: [&'a [usize]; 2],
        faces: [&'a [usize]; 3],
        tris: &'a [[usize; 3]],
        card2: usize,
    }
    fn rec(
        c: &Ctx<'_>,
        family: &mut Vec<usize>,
        edge_val: &mut HashMap<(usize, usize), usize>,
        vertex_val: &mut HashMap<usize, usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let depth = family.len();
        if depth == c.tris.len() {
            out.push(family.clone());
            return;
        }
        let [a, b, v] = c.tris[depth];
        for s in 0..c.card2 {
            let edges = [((b, v), c.faces[0][s]), ((a, v), c.faces[1][s]), ((a, b), c.faces[2][s])];
            let mut vertices = Vec::with_capacity(6);
            for &((p, q), e) in &edges {
                vertices.push((p, c.d1[1][e]));
                vertices.push((q, c.d1[0][e]));
            }
            let edge_ok = edges.iter().all(|(k, e)| edge_val.get(k).is_none_or(|v| v == e));
            let vertex_ok = vertices.iter().all(|(k, e)| vertex_val.get(k).is_none_or(|v| v == e))
                && vertices.iter().all(|&(k, e)| vertices.iter().all(|&(k2, e2)| k != k2 || e == e2));
            if !(edge_ok && vertex_ok) {
                continue;
            }
            let new_edges: Vec<_> = edges.iter().filter(|(k, _)| !edge_val.contains_key(k)).copied().collect();
            let mut new_vertices: Vec<(usize, usize)> = Vec::new();
            for &(k, e) in &vertices {
                if !vertex_val.contains_key(&k) && !new_vertices.iter().any(|&(k2, _)| k2 == k) {
                    new_vertices.push((k, e));
                }
            }
            edge_val.extend(new_edges.iter().copied());
            vertex_val.extend(new_vertices.iter().copied());
            family.push(s);
            rec(c, family, edge_val, vertex_val, out);
            family.pop();
            new_edges.iter().for_each(|(k, _)| {
                edge_val.remove(k);
            });
            new_vertices.iter().for_each(|(k, _)| {
                vertex_val.remove(k);
            });
        }
    }
    let ctx = Ctx { d1: [d1_0, d1_1], faces, tris, card2: x.card(2) };
    rec(&ctx, &mut family, &mut edge_val, &mut vertex_val, &mut out);
    Ok(out)
}

/// `X_n → X_2 ×_{X_1} ⋯ ×_{X_1} X_2` for the triangulation `t`.
pub fn two_segal_check(x: &FinSimplicialSet, t: &Triangulation) -> Result<Verdict> {
    let image = triangulation_map(x, t)?;
    let families = triangle_families(x, t)?;
    Ok(compare(t.n(), Some(t.triangles().to_vec()), image, &families))
}

/// The limit over `t` computed independently as maps `Δ[𝒯] → X`, read off
/// at the triangles. Sorted.
pub fn limit_by_maps(x: &FinSimplicialSet, t: &Triangulation) -> Result<Vec<Vec<usize>>> {
    let top = x.truncation();
    let FlavoredArrow::Simplicial(arrow) = triangulation_object(t, Flavor::Simplicial, top)? else {
        unreachable!("simplicial flavor requested")
    };
    let level2 = &representable_simplicial_elements(t.n(), top)?[2];
    let slots: Vec<usize> = t
        .triangles()
        .iter()
        .map(|tri| {
            let f = ordinal(t.n(), tri);
            let global = level2.binary_search(&f).expect("triangle is a 2-simplex");
            arrow.map.levels[2].iter().position(|&g| g == global).expect("triangle lies in the subobject")
        })
        .collect();
    let mut out: Vec<Vec<usize>> = MapSearch::new(&arrow.source, x)
        .all()
        .iter()
        .map(|m| slots.iter().map(|&s| m.levels[2][s]).collect())
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSegalReport {
    pub max_n: usize,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

/// [`two_segal_check`] for every triangulation with `3 ≤ n ≤ max_n`.
pub fn two_segal_report(x: &FinSimplicialSet, max_n: usize) -> Result<TwoSegalReport> {
    check_level(x, max_n)?;
    let mut verdicts = Vec::new();
    for n in 3..=max_n {
        for t in enumerate_triangulations(n)? {
            verdicts.push(two_segal_check(x, &t)?);
        }
    }
    let pass = verdicts.iter().all(Verdict::is_bijective);
    Ok(TwoSegalReport { max_n, verdicts, pass })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicSegalLevel {
    pub n: usize,
    pub segal: Verdict,
    /// `|Hom(Λ[n], X)|`.
    pub representable_maps: u128,
    /// `|Hom(Γ(n), X)|`.
    pub spine_maps: u128,
    /// Restriction `Hom(Λ[n], X) → Hom(Γ(n), X)` is a bijection.
    pub restriction_bijective: bool,
    /// The two routes give the same answer.
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicSegalReport {
    pub levels: Vec<CyclicSegalLevel>,
    pub pass: bool,
}

/// Segal condition for a cyclic set, through its underlying simplicial set
/// and, independently, through restriction along `Γ(n) → Λ[n]`.
pub fn cyclic_segal_check(x: &FinCyclicSet, max_n: usize) -> Result<CyclicSegalReport> {
    let top = x.truncation();
    if max_n > top {
        return Err(Error::TruncationExceeded { degree: max_n, truncation: top });
    }
    let under = x.underlying_simplicial();
    let mut levels = Vec::new();
    for n in 2..=max_n {
        let segal = segal_check(&under, n)?;
        let rep = representable_cyclic(n, top)?;
        let gamma = spine(n, top)?;
        let spine_maps = MapSearch::new(&gamma.source, x).count();
        let mut restricted = std::collections::HashSet::new();
        let mut injective = true;
        let representable_maps = MapSearch::new(&rep, x).for_each(|f| {
            injective &= restricted.insert(compose_maps(f, &gamma.map).levels);
            std::ops::ControlFlow::Continue(())
        });
        let restriction_bijective = injective && restricted.len() as u128 == spine_maps;
        let agree = restriction_bijective == segal.is_bijective() && representable_maps == x.card(n) as u128;
        levels.push(CyclicSegalLevel { n, segal, representable_maps, spine_maps, restriction_bijective, agree });
    }
    let pass = levels.iter().all(|l| l.agree && l.segal.is_bijective());
    Ok(CyclicSegalReport { levels, pass })
}
