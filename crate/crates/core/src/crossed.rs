//! Crossed simplicial groups given as value-level oracles: axiom checking,
//! the simplicial set of automorphism groups, and the symmetric instance.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::delta::{binomial, compose_ordinal, degeneracy, enumerate_monotone, face, OrdinalMap, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::lambda::{compose_cyclic, enumerate_hom, iota, CyclicMap};
use crate::presheaf::{FinPresheaf, FinSimplicialSet};
use crate::report::{AxiomCheck, Check};

pub trait Morphism: Clone + Debug + Eq + Hash + Ord + Serialize {}
impl<M: Clone + Debug + Eq + Hash + Ord + Serialize> Morphism for M {}

type HomFn<M> = Box<dyn Fn(usize, usize) -> Result<Vec<M>>>;
type ComposeFn<M> = Box<dyn Fn(&M, &M) -> Result<M>>;

/// A category containing Δ as a wide subcategory, described by hom-set
/// enumeration, composition `compose(g, f) = g ∘ f`, identities and the
/// embedding of Δ.
pub struct CrossedOracle<M> {
    pub name: String,
    pub hom: HomFn<M>,
    pub compose: ComposeFn<M>,
    pub identity: Box<dyn Fn(usize) -> M>,
    pub embed_delta: Box<dyn Fn(&OrdinalMap) -> M>,
}

impl CrossedOracle<CyclicMap> {
    pub fn lambda() -> Self {
        CrossedOracle {
            name: "lambda".into(),
            hom: Box::new(enumerate_hom),
            compose: Box::new(compose_cyclic),
            identity: Box::new(CyclicMap::identity),
            embed_delta: Box::new(iota),
        }
    }
}

impl CrossedOracle<SymMap> {
    pub fn symmetric() -> Self {
        CrossedOracle {
            name: "symmetric".into(),
            hom: Box::new(enumerate_sym),
            compose: Box::new(compose_sym),
            identity: Box::new(SymMap::identity),
            embed_delta: Box::new(SymMap::from_ordinal),
        }
    }
}

impl CrossedOracle<OrdinalMap> {
    /// Δ itself, with trivial automorphism groups.
    pub fn delta() -> Self {
        CrossedOracle {
            name: "delta".into(),
            hom: Box::new(enumerate_monotone),
            compose: Box::new(compose_ordinal),
            identity: Box::new(OrdinalMap::identity),
            embed_delta: Box::new(OrdinalMap::clone),
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("morphisms serialize")
}

/// Factorization counts for one pair of degrees.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCheck {
    pub n: usize,
    pub m: usize,
    pub morphisms: usize,
    pub pass: bool,
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CsgReport {
    pub oracle: String,
    pub max_degree: usize,
    pub automorphisms: Vec<usize>,
    pub laws: Vec<AxiomCheck>,
    pub factorization: Vec<PairCheck>,
    pub pass: bool,
}

struct Tables<M> {
    hom: Vec<Vec<Vec<M>>>,
    aut: Vec<Vec<M>>,
}

fn tables<M: Morphism>(oracle: &CrossedOracle<M>, top: usize) -> Result<Tables<M>> {
    let mut hom = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let row: Vec<Vec<M>> = (0..=top).map(|m| (oracle.hom)(n, m)).collect::<Result<_>>()?;
        hom.push(row);
    }
    let total: u128 = hom.iter().flatten().map(|h| h.len() as u128).sum();
    if total > DEFAULT_LIMIT {
        return Err(Error::ResourceLimit { what: "crossed hom-sets", needed: total, limit: DEFAULT_LIMIT });
    }
    // in a finite monoid g is invertible iff some power of g is the identity
    let mut aut = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let id = (oracle.identity)(n);
        let mut group = Vec::new();
        for g in &hom[n][n] {
            let mut seen = std::collections::HashSet::new();
            let mut power = g.clone();
            while power != id && seen.insert(power.clone()) {
                power = (oracle.compose)(g, &power)?;
            }
            if power == id {
                group.push(g.clone());
            }
        }
        group.sort();
        aut.push(group);
    }
    Ok(Tables { hom, aut })
}

/// Composites `embed(f) ∘ g` for `f ∈ Δ(n, m)`, `g ∈ Aut(n)`.
fn factorizations<M: Morphism>(
    oracle: &CrossedOracle<M>,
    aut: &[M],
    n: usize,
    m: usize,
) -> Result<HashMap<M, Vec<(OrdinalMap, M)>>> {
    let mut out: HashMap<M, Vec<(OrdinalMap, M)>> = HashMap::new();
    for f in enumerate_monotone(n, m)? {
        let ef = (oracle.embed_delta)(&f);
        for g in aut {
            out.entry((oracle.compose)(&ef, g)?).or_default().push((f.clone(), g.clone()));
        }
    }
    Ok(out)
}

/// Checks category laws, functoriality of the Δ-embedding and unique
/// factorization `φ = embed(f) ∘ g` with `g` an automorphism.
pub fn verify_csg_axioms<M: Morphism>(oracle: &CrossedOracle<M>, max_degree: usize) -> Result<CsgReport> {
    let top = max_degree;
    let Tables { hom, aut } = tables(oracle, top)?;
    let small = top.min(2);

    let mut identity = Check::new("identity laws");
    let mut associativity = Check::new("associativity");
    let mut embedding = Check::new("Δ embeds as a wide subcategory");
    for n in 0..=small {
        for m in 0..=small {
            for f in &hom[n][m] {
                let left = (oracle.compose)(&(oracle.identity)(m), f)?;
                let right = (oracle.compose)(f, &(oracle.identity)(n))?;
                identity.record(&left == f && &right == f, || to_json(f));
                for p in 0..=small {
                    for g in &hom[m][p] {
                        let gf = (oracle.compose)(g, f)?;
                        for q in 0..=small {
                            for h in &hom[p][q] {
                                let lhs = (oracle.compose)(h, &gf)?;
                                let rhs = (oracle.compose)(&(oracle.compose)(h, g)?, f)?;
                                associativity.record(lhs == rhs, || json!([to_json(h), to_json(g), to_json(f)]));
                            }
                        }
                    }
                }
            }
            for f in enumerate_monotone(n, m)? {
                let ef = (oracle.embed_delta)(&f);
                embedding.record(hom[n][m].contains(&ef), || to_json(&f));
                for p in 0..=small {
                    for g in enumerate_monotone(m, p)? {
                        let lhs = (oracle.embed_delta)(&compose_ordinal(&g, &f)?);
                        let rhs = (oracle.compose)(&(oracle.embed_delta)(&g), &ef)?;
                        embedding.record(lhs == rhs, || json!([to_json(&g), to_json(&f)]));
                    }
                }
            }
        }
        embedding.record((oracle.embed_delta)(&OrdinalMap::identity(n)) == (oracle.identity)(n), || json!(n));
    }

    let mut factorization = Vec::new();
    for n in 0..=top {
        for m in 0..=top {
            let found = factorizations(oracle, &aut[n], n, m)?;
            let mut witness = None;
            for phi in &hom[n][m] {
                let hits = found.get(phi).map_or(0, Vec::len);
                if hits != 1 && witness.is_none() {
                    witness = Some(json!({ "morphism": to_json(phi), "factorizations": hits }));
                }
            }
            if witness.is_none() {
                let mut stray: Vec<&M> = found.keys().filter(|c| !hom[n][m].contains(c)).collect();
                stray.sort();
                if let Some(c) = stray.first() {
                    witness = Some(json!({ "composite_outside_hom": to_json(*c) }));
                }
            }
            factorization.push(PairCheck { n, m, morphisms: hom[n][m].len(), pass: witness.is_none(), witness });
        }
    }
    let laws: Vec<AxiomCheck> = [identity, associativity, embedding].into_iter().map(Check::finish).collect();
    let pass = laws.iter().all(|l| l.pass) && factorization.iter().all(|p| p.pass);
    Ok(CsgReport {
        oracle: oracle.name.clone(),
        max_degree,
        automorphisms: aut.iter().map(Vec::len).collect(),
        laws,
        factorization,
        pass,
    })
}

/// The simplicial set `𝔊_*`: level `n` is `Aut(⟨n⟩)`, sorted, and a
/// simplicial operator `φ` sends `g` to the automorphism part of `g ∘ φ`.
/// Levels up to `truncation` suffice since the top level stores no
/// degeneracies.
pub fn build_g_star<M: Morphism>(oracle: &CrossedOracle<M>, truncation: usize) -> Result<FinSimplicialSet> {
    let report = verify_csg_axioms(oracle, truncation)?;
    if !report.pass {
        return Err(Error::AxiomFailure(format!("{} fails the crossed simplicial group axioms", oracle.name)));
    }
    let Tables { aut, .. } = tables(oracle, truncation)?;
    let act = |phi: &OrdinalMap| -> Result<Vec<usize>> {
        let (src, tgt) = (phi.src(), phi.tgt());
        let found = factorizations(oracle, &aut[src], src, tgt)?;
        let ephi = (oracle.embed_delta)(phi);
        aut[tgt]
            .iter()
            .map(|g| {
                let composite = (oracle.compose)(g, &ephi)?;
                let (_, part) = &found[&composite][0];
                Ok(aut[src].binary_search(part).expect("automorphism part is an automorphism"))
            })
            .collect()
    };
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        d.push(if n == 0 { vec![] } else { (0..=n).map(|i| act(&face(n, i)?)).collect::<Result<_>>()? });
        s.push(if n == truncation {
            vec![]
        } else {
            (0..=n).map(|i| act(&degeneracy(n, i)?)).collect::<Result<_>>()?
        });
    }
    let x = FinSimplicialSet::new_unchecked(truncation, aut.iter().map(Vec::len).collect(), d, s);
    let violations = x.validate();
    if let Some(v) = violations.first() {
        return Err(Error::AxiomFailure(format!("induced operators break a simplicial identity: {v}")));
    }
    Ok(x)
}

/// A map of finite sets `[n] → [m]` with a linear order on each fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSym", into = "RawSym")]
pub struct SymMap {
    src: usize,
    tgt: usize,
    set_map: Vec<usize>,
    /// `fiber_orders[j]` lists the preimage of `j` in its chosen order.
    fiber_orders: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSym {
    cat: String,
    src: usize,
    tgt: usize,
    set_map: Vec<usize>,
    fiber_orders: Vec<Vec<usize>>,
}

impl TryFrom<RawSym> for SymMap {
    type Error = Error;

    fn try_from(raw: RawSym) -> Result<Self> {
        if raw.cat != "sym" {
            return Err(Error::Parse(format!("expected cat \"sym\", found {:?}", raw.cat)));
        }
        SymMap::new(raw.src, raw.tgt, raw.fiber_orders)
    }
}

impl From<SymMap> for RawSym {
    fn from(f: SymMap) -> Self {
        RawSym { cat: "sym".into(), src: f.src, tgt: f.tgt, set_map: f.set_map, fiber_orders: f.fiber_orders }
    }
}

impl SymMap {
    /// Builds the map from its ordered fibers, which must partition `[n]`.
    pub fn new(src: usize, tgt: usize, fiber_orders: Vec<Vec<usize>>) -> Result<Self> {
        if fiber_orders.len() != tgt + 1 {
            return Err(Error::WrongLength { expected: tgt + 1, found: fiber_orders.len() });
        }
        let mut set_map = vec![usize::MAX; src + 1];
        for (j, fiber) in fiber_orders.iter().enumerate() {
            for &x in fiber {
                if x > src {
                    return Err(Error::OutOfRange { index: j, value: x as i64, bound: src });
                }
                if set_map[x] != usize::MAX {
                    return Err(Error::IncompatibleFiberOrder { fiber: j });
                }
                set_map[x] = j;
            }
        }
        if let Some(x) = set_map.iter().position(|&v| v == usize::MAX) {
            return Err(Error::IncompatibleFiberOrder { fiber: x });
        }
        Ok(SymMap { src, tgt, set_map, fiber_orders })
    }

    pub fn identity(n: usize) -> Self {
        SymMap::from_ordinal(&OrdinalMap::identity(n))
    }

    /// A monotone map with its fibers in their natural order.
    pub fn from_ordinal(f: &OrdinalMap) -> Self {
        let mut fiber_orders = vec![Vec::new(); f.tgt() + 1];
        for (x, &y) in f.images().iter().enumerate() {
            fiber_orders[y].push(x);
        }
        SymMap { src: f.src(), tgt: f.tgt(), set_map: f.images().to_vec(), fiber_orders }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn set_map(&self) -> &[usize] {
        &self.set_map
    }

    pub fn fiber_orders(&self) -> &[Vec<usize>] {
        &self.fiber_orders
    }

    /// `φ = embed(f) ∘ σ`: the fibers read in target order are `a_0, …, a_n`,
    /// `σ(a_p) = p` and `f(p) = φ(a_p)`.
    pub fn canonical_factor(&self) -> (OrdinalMap, SymMap) {
        let a: Vec<usize> = self.fiber_orders.iter().flatten().copied().collect();
        let f = OrdinalMap::from_images_unchecked(self.src, self.tgt, a.iter().map(|&x| self.set_map[x]).collect());
        let mut sigma = vec![Vec::new(); self.src + 1];
        for (p, &x) in a.iter().enumerate() {
            sigma[p].push(x);
        }
        // σ's fiber over p is {a_p}
        let sigma = SymMap::new(self.src, self.src, sigma).expect("a permutation");
        (f, sigma)
    }
}

/// `g ∘ f`; the fiber over `z` lists `f`'s fibers over the points of
/// `g`'s fiber over `z`, in `g`'s order.
pub fn compose_sym(g: &SymMap, f: &SymMap) -> Result<SymMap> {
    if f.tgt != g.src {
        return Err(Error::DegreeMismatch { left: g.src, right: f.tgt });
    }
    let fiber_orders: Vec<Vec<usize>> = g
        .fiber_orders
        .iter()
        .map(|fiber| fiber.iter().flat_map(|&y| f.fiber_orders[y].iter().copied()).collect())
        .collect();
    Ok(SymMap { src: f.src, tgt: g.tgt, set_map: f.set_map.iter().map(|&y| g.set_map[y]).collect(), fiber_orders })
}

/// Every map `[n] → [m]` with ordered fibers, sorted.
pub fn enumerate_sym(n: usize, m: usize) -> Result<Vec<SymMap>> {
    let factorial: u128 = (1..=n as u128 + 1).product();
    let needed = factorial * binomial((n + m + 1) as u64, (n + 1) as u64);
    if needed > DEFAULT_LIMIT {
        return Err(Error::ResourceLimit { what: "symmetric hom-set", needed, limit: DEFAULT_LIMIT });
    }
    let mut out = Vec::new();
    for set_map in (0..=n).map(|_| 0..=m).multi_cartesian_product() {
        let fibers: Vec<Vec<usize>> = (0..=m).map(|j| (0..=n).filter(|&x| set_map[x] == j).collect()).collect();
        for orders in fibers.iter().map(|f| f.iter().copied().permutations(f.len())).multi_cartesian_product() {
            out.push(SymMap { src: n, tgt: m, set_map: set_map.clone(), fiber_orders: orders });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::tau;

    #[test]
    fn lambda_passes() {
        let report = verify_csg_axioms(&CrossedOracle::lambda(), 4).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.automorphisms, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn symmetric_passes() {
        let report = verify_csg_axioms(&CrossedOracle::symmetric(), 3).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.automorphisms, vec![1, 2, 6, 24]);
    }

    #[test]
    fn tampered_composition_fails_with_witness() {
        let mut oracle = CrossedOracle::lambda();
        oracle.compose = Box::new(|g, f| {
            let h = compose_cyclic(g, f)?;
            if h.src() == 1 && h.tgt() == 0 {
                compose_cyclic(&h, &tau(1))
            } else {
                Ok(h)
            }
        });
        let report = verify_csg_axioms(&oracle, 2).unwrap();
        assert!(!report.pass);
        let failing = report.laws.iter().find(|l| !l.pass).unwrap();
        assert!(failing.witness.is_some());
    }

    #[test]
    fn g_star_levels() {
        let lambda = build_g_star(&CrossedOracle::lambda(), 6).unwrap();
        assert_eq!(lambda.cards(), &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(lambda.nondegenerate_counts().unwrap(), vec![1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(lambda.euler_characteristic().unwrap(), 0);
        let sym = build_g_star(&CrossedOracle::symmetric(), 3).unwrap();
        assert_eq!(sym.cards(), &[1, 2, 6, 24]);
        let delta = build_g_star(&CrossedOracle::delta(), 4).unwrap();
        assert_eq!(delta, FinSimplicialSet::constant(1, 4));
    }

    #[test]
    fn lambda_star_matches_the_crossed_action() {
        let x = build_g_star(&CrossedOracle::lambda(), 3).unwrap();
        for n in 1..=3 {
            let auts: Vec<CyclicMap> = {
                let mut v: Vec<_> = (0..=n as i64).map(|k| crate::lambda::tau_power(n, k)).collect();
                v.sort();
                v
            };
            for i in 0..=n {
                for (gi, g) in auts.iter().enumerate() {
                    let k = (0..=n).find(|&k| &crate::lambda::tau_power(n, k as i64) == g).unwrap();
                    let (_, r) = crate::lambda::star_action(&face(n, i).unwrap(), k);
                    let expected = crate::lambda::tau_power(n - 1, r as i64);
                    let pos = {
                        let mut v: Vec<_> = (0..n as i64).map(|k| crate::lambda::tau_power(n - 1, k)).collect();
                        v.sort();
                        v.binary_search(&expected).unwrap()
                    };
                    assert_eq!(x.d(n, i)[gi], pos);
                }
            }
        }
    }

    #[test]
    fn sym_composition() {
        let f = SymMap::new(2, 1, vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(compose_sym(&SymMap::identity(1), &f).unwrap(), f);
        assert_eq!(compose_sym(&f, &SymMap::identity(2)).unwrap(), f);
        let g = SymMap::new(1, 0, vec![vec![1, 0]]).unwrap();
        let gf = compose_sym(&g, &f).unwrap();
        assert_eq!(gf.fiber_orders(), &[vec![1, 2, 0]]);
        assert!(compose_sym(&f, &g).is_err());
        assert!(SymMap::new(2, 1, vec![vec![0], vec![1]]).is_err());
        assert!(SymMap::new(1, 1, vec![vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn sym_counts() {
        assert_eq!(enumerate_sym(1, 0).unwrap().len(), 2);
        for n in 0..=3 {
            for m in 0..=3 {
                let brute = (0..=n)
                    .map(|_| 0..=m)
                    .multi_cartesian_product()
                    .map(|u| {
                        (0..=m)
                            .map(|j| (1..=u.iter().filter(|&&v| v == j).count()).product::<usize>())
                            .product::<usize>()
                    })
                    .sum::<usize>();
                assert_eq!(enumerate_sym(n, m).unwrap().len(), brute);
                let closed = (1..=n + 1).product::<usize>() as u128 * binomial((n + m + 1) as u64, (n + 1) as u64);
                assert_eq!(brute as u128, closed);
            }
        }
    }

    #[test]
    fn sym_associativity_and_factorization() {
        for f in enumerate_sym(2, 1).unwrap() {
            let (d, sigma) = f.canonical_factor();
            assert_eq!(compose_sym(&SymMap::from_ordinal(&d), &sigma).unwrap(), f);
            for g in enumerate_sym(1, 1).unwrap() {
                for h in enumerate_sym(1, 0).unwrap() {
                    let lhs = compose_sym(&h, &compose_sym(&g, &f).unwrap()).unwrap();
                    let rhs = compose_sym(&compose_sym(&h, &g).unwrap(), &f).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn sym_json() {
        let f = SymMap::new(1, 0, vec![vec![1, 0]]).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"cat":"sym","src":1,"tgt":0,"set_map":[0,0],"fiber_orders":[[1,0]]}"#);
        assert_eq!(serde_json::from_str::<SymMap>(&text).unwrap(), f);
    }
}
