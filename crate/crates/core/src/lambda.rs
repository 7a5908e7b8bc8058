//! The cyclic category Λ.
//!
//! A morphism `⟨n⟩ → ⟨m⟩` is a class of ℤ-equivariant monotone maps
//! `F : ℤ → ℤ` with `F(i + n + 1) = F(i) + m + 1`, modulo the shift
//! `F ↦ F + (m + 1)`. It is stored as the window `W = (F(0), …, F(n))` of the
//! unique representative with `0 ≤ W₀ ≤ m`, so equality is sequence equality.
//!
//! The generator `τ_n` is the rotation with underlying map `i ↦ i − 1`; with
//! this orientation the cyclic identities read
//! `τ_n d_0 = d_n`, `τ_n d_i = d_{i−1} τ_{n−1}`, `τ_n s_0 = s_n τ_{n+1}²`,
//! `τ_n s_i = s_{i−1} τ_{n+1}` and `τ_n^{n+1} = id`.

use serde::{Deserialize, Serialize};

use crate::delta::{binomial, enumerate_monotone, OrdinalMap, DEFAULT_LIMIT};
use crate::error::{Error, Result};

/// A morphism `⟨src⟩ → ⟨tgt⟩` in normalized window form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLambda", into = "RawLambda")]
pub struct CyclicMap {
    src: usize,
    tgt: usize,
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLambda {
    cat: String,
    src: usize,
    tgt: usize,
    window: Vec<i64>,
}

impl TryFrom<RawLambda> for CyclicMap {
    type Error = Error;

    fn try_from(raw: RawLambda) -> Result<Self> {
        if raw.cat != "lambda" {
            return Err(Error::Parse(format!("expected cat \"lambda\", found {:?}", raw.cat)));
        }
        CyclicMap::new(raw.src, raw.tgt, raw.window)
    }
}

impl From<CyclicMap> for RawLambda {
    fn from(f: CyclicMap) -> Self {
        RawLambda { cat: "lambda".into(), src: f.src, tgt: f.tgt, window: f.window }
    }
}

fn check_shape(n: usize, m: usize, window: &[i64]) -> Result<()> {
    if window.len() != n + 1 {
        return Err(Error::WrongLength { expected: n + 1, found: window.len() });
    }
    if let Some(index) = (1..window.len()).find(|&i| window[i] < window[i - 1]) {
        return Err(Error::NotMonotone { index });
    }
    let period = m + 1;
    if window[n] > window[0] + period as i64 {
        return Err(Error::WrapViolation { first: window[0], last: window[n], period });
    }
    Ok(())
}

impl CyclicMap {
    /// Validated constructor; rejects windows that are not normalized.
    pub fn new(src: usize, tgt: usize, window: Vec<i64>) -> Result<Self> {
        check_shape(src, tgt, &window)?;
        if window[0] < 0 || window[0] > tgt as i64 {
            return Err(Error::NotNormalized { first: window[0], bound: tgt });
        }
        Ok(CyclicMap { src, tgt, window })
    }

    /// Accepts any representative of the orbit and shifts it into normal form.
    pub fn normalize(src: usize, tgt: usize, raw: Vec<i64>) -> Result<Self> {
        check_shape(src, tgt, &raw)?;
        Ok(Self::normalized(src, tgt, raw))
    }

    fn normalized(src: usize, tgt: usize, mut window: Vec<i64>) -> Self {
        let period = tgt as i64 + 1;
        let shift = window[0].div_euclid(period) * period;
        for w in &mut window {
            *w -= shift;
        }
        CyclicMap { src, tgt, window }
    }

    pub fn identity(n: usize) -> Self {
        CyclicMap { src: n, tgt: n, window: (0..=n as i64).collect() }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// The equivariant lift `F` evaluated at any integer.
    pub fn lift(&self, x: i64) -> i64 {
        let p = self.src as i64 + 1;
        let q = x.div_euclid(p);
        let r = x.rem_euclid(p) as usize;
        self.window[r] + q * (self.tgt as i64 + 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.src)
    }

    pub fn is_automorphism(&self) -> bool {
        let mut seen = vec![false; self.tgt + 1];
        self.src == self.tgt && self.underlying_table().into_iter().all(|v| !std::mem::replace(&mut seen[v], true))
    }

    /// Underlying map of finite sets `i ↦ Wᵢ mod (m+1)`.
    pub fn underlying_table(&self) -> Vec<usize> {
        let period = self.tgt as i64 + 1;
        self.window.iter().map(|w| w.rem_euclid(period) as usize).collect()
    }
}

/// The generator `τ_n`, underlying map `i ↦ i − 1 mod n+1`.
pub fn tau(n: usize) -> CyclicMap {
    tau_power(n, 1)
}

/// `τ_n^k`, with `k` reduced modulo `n + 1`.
pub fn tau_power(n: usize, k: i64) -> CyclicMap {
    let k = k.rem_euclid(n as i64 + 1);
    CyclicMap::normalized(n, n, (0..=n as i64).map(|i| i - k).collect())
}

/// `g ∘ f`, computed on lifts then renormalized.
pub fn compose_cyclic(g: &CyclicMap, f: &CyclicMap) -> Result<CyclicMap> {
    if f.tgt != g.src {
        return Err(Error::DegreeMismatch { left: g.src, right: f.tgt });
    }
    let window = f.window.iter().map(|&w| g.lift(w)).collect();
    Ok(CyclicMap::normalized(f.src, g.tgt, window))
}

/// The cyclic closure `ι : Δ → Λ`.
pub fn iota(f: &OrdinalMap) -> CyclicMap {
    CyclicMap { src: f.src(), tgt: f.tgt(), window: f.images().iter().map(|&v| v as i64).collect() }
}

/// The pair `(f, r)` with `φ = ι(f) ∘ τ^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawPair")]
pub struct CanonicalPair {
    pub delta: OrdinalMap,
    pub rot: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    delta: OrdinalMap,
    rot: usize,
}

impl TryFrom<RawPair> for CanonicalPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        CanonicalPair::new(raw.delta, raw.rot)
    }
}

impl CanonicalPair {
    pub fn new(delta: OrdinalMap, rot: usize) -> Result<Self> {
        if rot > delta.src() {
            return Err(Error::IndexOutOfRange { what: "rotation", index: rot, bound: delta.src() });
        }
        Ok(CanonicalPair { delta, rot })
    }
}

/// Unique factorization `φ = ι(f) ∘ τ^r`.
pub fn canonical_factor(phi: &CyclicMap) -> CanonicalPair {
    let n = phi.src;
    let period = phi.tgt as i64 + 1;
    let wrapped = phi.window.iter().filter(|&&w| w >= period).count();
    let images = (0..=n)
        .map(|j| {
            if j < wrapped {
                (phi.window[j + n + 1 - wrapped] - period) as usize
            } else {
                phi.window[j - wrapped] as usize
            }
        })
        .collect();
    CanonicalPair { delta: OrdinalMap::from_images_unchecked(n, phi.tgt, images), rot: (n + 1 - wrapped) % (n + 1) }
}

pub fn from_canonical(p: &CanonicalPair) -> CyclicMap {
    compose_cyclic(&iota(&p.delta), &tau_power(p.delta.src(), p.rot as i64)).expect("degrees agree by construction")
}

/// A set map with a chosen linear order on each fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnderlyingData {
    pub src: usize,
    pub tgt: usize,
    pub set_map: Vec<usize>,
    pub fiber_orders: Vec<Vec<usize>>,
}

/// `U(φ)`: the underlying set map.
pub fn underlying(phi: &CyclicMap) -> Vec<usize> {
    phi.underlying_table()
}

/// Elements of the fiber over `v`, in the order inherited from the lift.
fn fiber_order(phi: &CyclicMap, v: usize) -> Vec<usize> {
    let p = phi.src as i64 + 1;
    let u = phi.underlying_table();
    let Some(x0) = u.iter().position(|&w| w == v) else {
        return Vec::new();
    };
    let level = phi.lift(x0 as i64);
    let mut start = x0 as i64;
    while phi.lift(start - 1) == level {
        start -= 1;
    }
    (start..).take_while(|&x| phi.lift(x) == level).map(|x| x.rem_euclid(p) as usize).collect()
}

pub fn to_underlying_data(phi: &CyclicMap) -> UnderlyingData {
    UnderlyingData {
        src: phi.src,
        tgt: phi.tgt,
        set_map: phi.underlying_table(),
        fiber_orders: (0..=phi.tgt).map(|v| fiber_order(phi, v)).collect(),
    }
}

pub fn from_underlying_data(u: &UnderlyingData) -> Result<CyclicMap> {
    if u.set_map.len() != u.src + 1 {
        return Err(Error::WrongLength { expected: u.src + 1, found: u.set_map.len() });
    }
    if u.fiber_orders.len() != u.tgt + 1 {
        return Err(Error::WrongLength { expected: u.tgt + 1, found: u.fiber_orders.len() });
    }
    if let Some((index, &v)) = u.set_map.iter().enumerate().find(|(_, &v)| v > u.tgt) {
        return Err(Error::OutOfRange { index, value: v as i64, bound: u.tgt });
    }
    let candidates = fiber_over_underlying(u.tgt, &u.set_map);
    if candidates.is_empty() {
        return Err(Error::NotCyclicallyMonotone);
    }
    for phi in &candidates {
        if to_underlying_data(phi).fiber_orders == u.fiber_orders {
            return Ok(phi.clone());
        }
    }
    let reference = to_underlying_data(&candidates[0]);
    let fiber = (0..=u.tgt).find(|&v| reference.fiber_orders[v] != u.fiber_orders[v]).unwrap_or(0);
    Err(Error::IncompatibleFiberOrder { fiber })
}

/// Least cut `(i, j)` such that `u` is weakly monotone from the linear order
/// `i+1, …, i` (mod n+1) to `j+1, …, j` (mod m+1).
pub fn is_cyclically_monotone(m: usize, u: &[usize]) -> Option<(usize, usize)> {
    let n1 = u.len();
    let m1 = m + 1;
    if n1 == 0 || u.iter().any(|&v| v > m) {
        return None;
    }
    for i in 0..n1 {
        for j in 0..m1 {
            let mut prev = 0;
            let ok = (0..n1).all(|p| {
                let q = (u[(i + 1 + p) % n1] + m1 - (j + 1) % m1) % m1;
                let good = q >= prev;
                prev = q;
                good
            });
            if ok {
                return Some((i, j));
            }
        }
    }
    None
}

/// All `φ` with `U(φ) = u`, sorted by window.
pub fn fiber_over_underlying(m: usize, u: &[usize]) -> Vec<CyclicMap> {
    let Some((i, j)) = is_cyclically_monotone(m, u) else {
        return Vec::new();
    };
    let n = u.len() - 1;
    let n1 = n + 1;
    let m1 = m + 1;
    let constant = u.iter().all(|&v| v == u[0]);
    if constant {
        // one lift per choice of where the single fiber starts
        let c = u[0] as i64;
        let mut out: Vec<_> = (0..n1)
            .map(|s| {
                let window = (0..n1).map(|k| if k < s { c } else { c + m1 as i64 }).collect();
                CyclicMap::normalized(n, m, window)
            })
            .collect();
        out.sort();
        return out;
    }
    let mut window = vec![0i64; n1];
    for p in 0..n1 {
        let x = (i + 1 + p) as i64;
        let q = (u[(i + 1 + p) % n1] + m1 - (j + 1) % m1) % m1;
        let value = (j + 1 + q) as i64;
        // bring x into 0..=n using equivariance
        let shift = x.div_euclid(n1 as i64);
        window[x.rem_euclid(n1 as i64) as usize] = value - shift * m1 as i64;
    }
    vec![CyclicMap::normalized(n, m, window)]
}

/// `|Hom_Λ(⟨n⟩, ⟨m⟩)| = (n+1)·C(n+m+1, n+1)`.
pub fn count_hom(n: usize, m: usize) -> u128 {
    (n as u128 + 1) * binomial((n + m + 1) as u64, (n + 1) as u64)
}

pub fn enumerate_hom(n: usize, m: usize) -> Result<Vec<CyclicMap>> {
    enumerate_hom_bounded(n, m, DEFAULT_LIMIT)
}

/// All morphisms `⟨n⟩ → ⟨m⟩`, sorted by window.
pub fn enumerate_hom_bounded(n: usize, m: usize, limit: u128) -> Result<Vec<CyclicMap>> {
    let needed = count_hom(n, m);
    if needed > limit {
        return Err(Error::ResourceLimit { what: "cyclic morphisms", needed, limit });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let top_offset = m as i64 + 1;
    for w0 in 0..=m as i64 {
        let top = w0 + top_offset;
        let mut window = vec![w0; n + 1];
        loop {
            out.push(CyclicMap { src: n, tgt: m, window: window.clone() });
            let Some(pos) = (1..=n).rev().find(|&i| window[i] < top) else {
                break;
            };
            let v = window[pos] + 1;
            for x in &mut window[pos..] {
                *x = v;
            }
        }
    }
    Ok(out)
}

/// The self-duality `Λ^op ≅ Λ`: `V_j = −min{ i : F(i) ≥ −j }`, normalized.
pub fn dual(phi: &CyclicMap) -> CyclicMap {
    let n1 = phi.src as i64 + 1;
    let window = (0..=phi.tgt as i64)
        .map(|j| {
            let mut i = -2 * n1;
            while phi.lift(i) < -j {
                i += 1;
            }
            -i
        })
        .collect();
    CyclicMap::normalized(phi.tgt, phi.src, window)
}

/// The crossed action: `τ_m^g ∘ ι(φ) = ι(ψ) ∘ τ_n^{g′}`; returns `(ψ, g′)`.
pub fn star_action(phi: &OrdinalMap, g: usize) -> (OrdinalMap, usize) {
    let composite = compose_cyclic(&tau_power(phi.tgt(), g as i64), &iota(phi)).expect("degrees agree by construction");
    let CanonicalPair { delta, rot } = canonical_factor(&composite);
    (delta, rot)
}

/// `ι` of a face map.
pub fn cyclic_face(n: usize, i: usize) -> Result<CyclicMap> {
    crate::delta::face(n, i).map(|f| iota(&f))
}

/// `ι` of a degeneracy map.
pub fn cyclic_degeneracy(n: usize, i: usize) -> Result<CyclicMap> {
    crate::delta::degeneracy(n, i).map(|f| iota(&f))
}

/// All canonical pairs `(f, r)` for a hom-set, in enumeration order of `f`.
pub fn enumerate_canonical_pairs(n: usize, m: usize) -> Result<Vec<CanonicalPair>> {
    Ok(enumerate_monotone(n, m)?
        .into_iter()
        .flat_map(|f| (0..=n).map(move |rot| CanonicalPair { delta: f.clone(), rot }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{degeneracy, face};
    use std::collections::BTreeSet;

    fn delta_compose(g: &OrdinalMap, f: &OrdinalMap) -> OrdinalMap {
        crate::delta::compose_ordinal(g, f).unwrap()
    }

    fn cm(n: usize, m: usize, w: &[i64]) -> CyclicMap {
        CyclicMap::new(n, m, w.to_vec()).unwrap()
    }

    fn c(g: &CyclicMap, f: &CyclicMap) -> CyclicMap {
        compose_cyclic(g, f).unwrap()
    }

    #[test]
    fn constructor_examples() {
        assert!(cm(1, 1, &[0, 1]).is_identity());
        assert_eq!(CyclicMap::normalize(1, 1, vec![2, 3]).unwrap().window(), &[0, 1]);
        assert_eq!(CyclicMap::new(1, 0, vec![0, 2]), Err(Error::WrapViolation { first: 0, last: 2, period: 1 }));
        assert_eq!(CyclicMap::new(1, 1, vec![2, 3]), Err(Error::NotNormalized { first: 2, bound: 1 }));
        assert_eq!(CyclicMap::new(1, 1, vec![1, 0]), Err(Error::NotMonotone { index: 1 }));
        assert_eq!(CyclicMap::normalize(0, 2, vec![-1]).unwrap().window(), &[2]);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1).window(), &[1, 2]);
        assert!(tau_power(2, 3).is_identity());
        assert_eq!(tau_power(1, -1).window(), &[1, 2]);
        assert_eq!(tau(2).window(), &[2, 3, 4]);
        assert_eq!(underlying(&tau(2)), vec![2, 0, 1]);
    }

    #[test]
    fn composition_examples() {
        assert!(c(&tau(1), &tau(1)).is_identity());
        let s = iota(&degeneracy(0, 0).unwrap());
        assert_eq!(s.window(), &[0, 0]);
        let st = c(&s, &tau(1));
        assert_eq!((st.src(), st.tgt(), st.window()), (1, 0, &[0, 1][..]));
        assert_ne!(st, s);
        for n in 0..=3 {
            for m in 0..=3 {
                for f in enumerate_hom(n, m).unwrap() {
                    assert_eq!(c(&CyclicMap::identity(m), &f), f);
                    assert_eq!(c(&f, &CyclicMap::identity(n)), f);
                }
            }
        }
        assert!(matches!(compose_cyclic(&tau(2), &tau(1)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn associativity() {
        for (n, m, k, l) in [(1, 2, 1, 2), (2, 1, 2, 1), (0, 2, 2, 0)] {
            let fs = enumerate_hom(n, m).unwrap();
            let gs = enumerate_hom(m, k).unwrap();
            let hs = enumerate_hom(k, l).unwrap();
            for f in &fs {
                for g in &gs {
                    let gf = c(g, f);
                    for h in &hs {
                        assert_eq!(c(h, &gf), c(&c(h, g), f));
                    }
                }
            }
        }
    }

    #[test]
    fn iota_examples() {
        assert!(iota(&OrdinalMap::identity(2)).is_identity());
        let d = iota(&face(1, 0).unwrap());
        assert_eq!((d.src(), d.tgt(), d.window()), (0, 1, &[1][..]));
        for n in 0..=3 {
            for m in 0..=3 {
                for k in 0..=3 {
                    for f in enumerate_monotone(n, m).unwrap() {
                        for g in enumerate_monotone(m, k).unwrap() {
                            assert_eq!(iota(&delta_compose(&g, &f)), c(&iota(&g), &iota(&f)));
                        }
                    }
                }
                let images: BTreeSet<_> = enumerate_monotone(n, m).unwrap().iter().map(iota).collect();
                assert_eq!(images.len() as u128, crate::delta::count_monotone(n, m));
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let p = canonical_factor(&tau(1));
        assert!(p.delta.is_identity());
        assert_eq!(p.rot, 1);
        let f = OrdinalMap::new(2, 3, vec![0, 2, 2]).unwrap();
        assert_eq!(canonical_factor(&iota(&f)), CanonicalPair { delta: f, rot: 0 });
        for n in 0..=4 {
            assert_eq!(canonical_factor(&tau_power(n, 1)).rot, 1 % (n + 1));
        }
    }

    #[test]
    fn canonical_round_trip() {
        for n in 0..=4 {
            for m in 0..=4 {
                for phi in enumerate_hom(n, m).unwrap() {
                    assert_eq!(from_canonical(&canonical_factor(&phi)), phi);
                }
                for p in enumerate_canonical_pairs(n, m).unwrap() {
                    assert_eq!(canonical_factor(&from_canonical(&p)), p);
                }
            }
        }
    }

    #[test]
    fn underlying_examples() {
        let both = enumerate_hom(1, 0).unwrap();
        assert_eq!(both.len(), 2);
        for phi in &both {
            assert_eq!(underlying(phi), vec![0, 0]);
        }
        for n in 0..=3 {
            for m in 0..=3 {
                for phi in enumerate_hom(n, m).unwrap() {
                    assert_eq!(from_underlying_data(&to_underlying_data(&phi)).unwrap(), phi);
                }
            }
        }
    }

    #[test]
    fn underlying_data_rejects_bad_orders() {
        let mut data = to_underlying_data(&iota(&OrdinalMap::new(2, 1, vec![0, 0, 1]).unwrap()));
        assert_eq!(data.fiber_orders[0], vec![0, 1]);
        data.fiber_orders[0] = vec![1, 0];
        assert!(matches!(from_underlying_data(&data), Err(Error::IncompatibleFiberOrder { fiber: 0 })));
        let bad = UnderlyingData {
            src: 3,
            tgt: 3,
            set_map: vec![0, 2, 1, 3],
            fiber_orders: vec![vec![0], vec![2], vec![1], vec![3]],
        };
        assert_eq!(from_underlying_data(&bad), Err(Error::NotCyclicallyMonotone));
    }

    #[test]
    fn cyclic_monotonicity_examples() {
        assert_eq!(is_cyclically_monotone(2, &[1, 1, 1]), Some((0, 0)));
        assert!(is_cyclically_monotone(2, &underlying(&tau(2))).is_some());
        assert_eq!(is_cyclically_monotone(3, &[0, 2, 1, 3]), None);
    }

    /// Brute-force cut search written independently from the library version.
    fn brute_cyclic(m: usize, u: &[usize]) -> bool {
        let n1 = u.len();
        (0..n1).any(|a| {
            (0..=m).any(|b| {
                let seq: Vec<usize> = (0..n1).map(|p| (u[(a + p) % n1] + m + 1 - b) % (m + 1)).collect();
                seq.windows(2).all(|w| w[0] <= w[1])
            })
        })
    }

    fn all_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..=n {
            out = out.into_iter().flat_map(|t| (0..=m).map(move |v| [t.clone(), vec![v]].concat())).collect();
        }
        out
    }

    #[test]
    fn fibers_are_singletons_off_constant_maps() {
        for n in 0..=4 {
            for m in 0..=4 {
                let homs = enumerate_hom(n, m).unwrap();
                let mut total = 0;
                for u in all_tables(n, m) {
                    let fiber = fiber_over_underlying(m, &u);
                    assert_eq!(brute_cyclic(m, &u), !fiber.is_empty(), "{u:?}");
                    let expected: Vec<_> = homs.iter().filter(|p| underlying(p) == u).cloned().collect();
                    assert_eq!(fiber, expected);
                    if !fiber.is_empty() {
                        let constant = u.iter().all(|&v| v == u[0]);
                        assert_eq!(fiber.len(), if constant { n + 1 } else { 1 });
                    }
                    total += fiber.len();
                }
                assert_eq!(total, homs.len());
            }
        }
        assert_eq!(fiber_over_underlying(0, &[0, 0, 0]).len(), 3);
        assert_eq!(fiber_over_underlying(1, &underlying(&tau(1))).len(), 1);
        assert!(fiber_over_underlying(3, &[0, 2, 1, 3]).is_empty());
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_hom(1, 0).unwrap().len(), 2);
        assert_eq!(enumerate_hom(0, 0).unwrap().len(), 1);
        assert_eq!(enumerate_hom(1, 1).unwrap().len(), 6);
        for n in 0..=6 {
            for m in 0..=6 {
                let homs = enumerate_hom(n, m).unwrap();
                assert_eq!(homs.len() as u128, count_hom(n, m));
                assert!(homs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert!(dual(&CyclicMap::identity(3)).is_identity());
        let d = dual(&iota(&OrdinalMap::new(1, 0, vec![0, 0]).unwrap()));
        assert_eq!((d.src(), d.tgt(), d.window()), (0, 1, &[0][..]));
        for n in 0..=4 {
            assert_eq!(dual(&tau(n)), tau(n));
        }
    }

    #[test]
    fn dual_is_involutive_contravariant_functor() {
        for n in 0..=4 {
            for m in 0..=4 {
                let homs = enumerate_hom(n, m).unwrap();
                let image: BTreeSet<_> = homs.iter().map(dual).collect();
                assert_eq!(image.len(), homs.len());
                for phi in &homs {
                    assert_eq!(dual(&dual(phi)), *phi);
                }
            }
        }
        for (n, m, k) in [(1, 2, 1), (2, 2, 2), (0, 3, 1), (3, 1, 2)] {
            for f in enumerate_hom(n, m).unwrap() {
                for g in enumerate_hom(m, k).unwrap() {
                    assert_eq!(dual(&c(&g, &f)), c(&dual(&f), &dual(&g)));
                }
            }
        }
    }

    #[test]
    fn star_action_examples() {
        let f = OrdinalMap::new(2, 3, vec![0, 2, 2]).unwrap();
        assert_eq!(star_action(&f, 0), (f, 0));
        for n in 1..=5 {
            let s_top = degeneracy(n, n).unwrap();
            for k in 0..=n {
                assert_eq!(star_action(&s_top, k).1, k);
            }
            let s_prev = degeneracy(n, n - 1).unwrap();
            assert_eq!(star_action(&s_prev, n).1, (n + 1) % (n + 2));
        }
    }

    #[test]
    fn cyclic_identities() {
        for n in 1..=6 {
            let t = tau(n);
            assert_eq!(c(&t, &cyclic_face(n, 0).unwrap()), cyclic_face(n, n).unwrap());
            for i in 1..=n {
                assert_eq!(c(&t, &cyclic_face(n, i).unwrap()), c(&cyclic_face(n, i - 1).unwrap(), &tau(n - 1)));
            }
        }
        for n in 0..=6 {
            let t = tau(n);
            let t1 = tau(n + 1);
            assert_eq!(c(&t, &cyclic_degeneracy(n, 0).unwrap()), c(&cyclic_degeneracy(n, n).unwrap(), &c(&t1, &t1)));
            for i in 1..=n {
                assert_eq!(c(&t, &cyclic_degeneracy(n, i).unwrap()), c(&cyclic_degeneracy(n, i - 1).unwrap(), &t1));
            }
            assert!(tau_power(n, n as i64 + 1).is_identity());
        }
    }

    #[test]
    fn automorphism_groups_are_cyclic() {
        for n in 0..=6 {
            let autos: Vec<_> = enumerate_hom(n, n).unwrap().into_iter().filter(|p| p.is_automorphism()).collect();
            assert_eq!(autos.len(), n + 1);
            let mut powers = BTreeSet::new();
            let mut acc = CyclicMap::identity(n);
            for _ in 0..=n {
                powers.insert(acc.clone());
                acc = c(&tau(n), &acc);
            }
            assert!(acc.is_identity());
            assert_eq!(powers, autos.into_iter().collect());
        }
    }

    #[test]
    fn json_round_trip() {
        let phi = tau(2);
        let text = serde_json::to_string(&phi).unwrap();
        assert_eq!(text, r#"{"cat":"lambda","src":2,"tgt":2,"window":[2,3,4]}"#);
        assert_eq!(serde_json::from_str::<CyclicMap>(&text).unwrap(), phi);
        assert!(serde_json::from_str::<CyclicMap>(r#"{"cat":"lambda","src":1,"tgt":1,"window":[2,3]}"#).is_err());
        let pair = canonical_factor(&phi);
        let text = serde_json::to_string(&pair).unwrap();
        assert_eq!(serde_json::from_str::<CanonicalPair>(&text).unwrap(), pair);
    }
}
