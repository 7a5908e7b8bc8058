//! The simplex category Δ and the interval category ∇.
//!
//! A morphism `[n] → [m]` of Δ is stored as its image sequence, so composition
//! is pointwise and equality is plain sequence comparison. Generator words
//! (faces and degeneracies) are derived on demand by [`decompose_generators`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the size of any exhaustive enumeration.
pub const DEFAULT_LIMIT: u128 = 5_000_000;

/// Binomial coefficient, exact in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// A monotone map `[src] → [tgt]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDelta", into = "RawDelta")]
pub struct OrdinalMap {
    src: usize,
    tgt: usize,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    cat: String,
    src: usize,
    tgt: usize,
    images: Vec<i64>,
}

impl TryFrom<RawDelta> for OrdinalMap {
    type Error = Error;

    fn try_from(raw: RawDelta) -> Result<Self> {
        if raw.cat != "delta" {
            return Err(Error::Parse(format!("expected cat \"delta\", found {:?}", raw.cat)));
        }
        OrdinalMap::new(raw.src, raw.tgt, raw.images)
    }
}

impl From<OrdinalMap> for RawDelta {
    fn from(f: OrdinalMap) -> Self {
        RawDelta { cat: "delta".into(), src: f.src, tgt: f.tgt, images: f.images.iter().map(|&v| v as i64).collect() }
    }
}

/// Checks the three invariants shared by ordinal and endpoint maps.
fn check_images(n: usize, m: usize, images: &[i64]) -> Result<Vec<usize>> {
    if images.len() != n + 1 {
        return Err(Error::WrongLength { expected: n + 1, found: images.len() });
    }
    for (index, &value) in images.iter().enumerate() {
        if value < 0 || value > m as i64 {
            return Err(Error::OutOfRange { index, value, bound: m });
        }
    }
    if let Some(index) = (1..images.len()).find(|&i| images[i] < images[i - 1]) {
        return Err(Error::NotMonotone { index });
    }
    Ok(images.iter().map(|&v| v as usize).collect())
}

impl OrdinalMap {
    /// Validated constructor.
    pub fn new(src: usize, tgt: usize, images: Vec<i64>) -> Result<Self> {
        let images = check_images(src, tgt, &images)?;
        Ok(OrdinalMap { src, tgt, images })
    }

    pub(crate) fn from_images_unchecked(src: usize, tgt: usize, images: Vec<usize>) -> Self {
        debug_assert_eq!(images.len(), src + 1);
        OrdinalMap { src, tgt, images }
    }

    pub fn identity(n: usize) -> Self {
        OrdinalMap { src: n, tgt: n, images: (0..=n).collect() }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.images[0] == 0 && self.images[self.src] == self.tgt && self.images.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Number of distinct values taken.
    pub fn rank(&self) -> usize {
        1 + self.images.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Epi–mono split: `self = mono ∘ epi` with `epi` surjective and `mono`
    /// injective.
    pub fn epi_mono(&self) -> (OrdinalMap, OrdinalMap) {
        let mut values = self.images.clone();
        values.dedup();
        let r = values.len() - 1;
        let mut epi = Vec::with_capacity(self.src + 1);
        let mut k = 0;
        for (i, &v) in self.images.iter().enumerate() {
            if i > 0 && v != self.images[i - 1] {
                k += 1;
            }
            epi.push(k);
        }
        (OrdinalMap { src: self.src, tgt: r, images: epi }, OrdinalMap { src: r, tgt: self.tgt, images: values })
    }
}

/// The face map `d_i : [n-1] → [n]`, skipping `i`.
pub fn face(n: usize, i: usize) -> Result<OrdinalMap> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange { what: "face", index: i, bound: n });
    }
    let images = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
    Ok(OrdinalMap { src: n - 1, tgt: n, images })
}

/// The degeneracy map `s_i : [n+1] → [n]`, hitting `i` twice.
pub fn degeneracy(n: usize, i: usize) -> Result<OrdinalMap> {
    if i > n {
        return Err(Error::IndexOutOfRange { what: "degeneracy", index: i, bound: n });
    }
    let images = (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
    Ok(OrdinalMap { src: n + 1, tgt: n, images })
}

/// `g ∘ f`.
pub fn compose_ordinal(g: &OrdinalMap, f: &OrdinalMap) -> Result<OrdinalMap> {
    if f.tgt != g.src {
        return Err(Error::DegreeMismatch { left: g.src, right: f.tgt });
    }
    let images = f.images.iter().map(|&i| g.images[i]).collect();
    Ok(OrdinalMap { src: f.src, tgt: g.tgt, images })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    Face,
    Degeneracy,
}

/// One letter of a generator word. `level` is the target object: a face
/// `(Face, n, i)` is `d_i : [n-1] → [n]`, a degeneracy `(Degeneracy, n, i)`
/// is `s_i : [n+1] → [n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub level: usize,
    pub index: usize,
}

impl Generator {
    pub fn to_map(self) -> OrdinalMap {
        match self.kind {
            GeneratorKind::Face => face(self.level, self.index),
            GeneratorKind::Degeneracy => degeneracy(self.level, self.index),
        }
        .expect("generator indices are in range by construction")
    }
}

/// Writes `f` as a word in the generators, listed in application order:
/// degeneracies first (descending index), then faces (ascending index).
pub fn decompose_generators(f: &OrdinalMap) -> Vec<Generator> {
    let mut word = Vec::new();
    // Degeneracies: collapse each tie f(i) = f(i+1), largest i first.
    let mut level = f.src;
    for i in (0..f.src).rev() {
        if f.images[i] == f.images[i + 1] {
            level -= 1;
            word.push(Generator { kind: GeneratorKind::Degeneracy, level, index: i });
        }
    }
    // Faces: skip each missing value, smallest first.
    let mut present = vec![false; f.tgt + 1];
    for &v in &f.images {
        present[v] = true;
    }
    for (v, _) in present.iter().enumerate().filter(|(_, &p)| !p) {
        level += 1;
        word.push(Generator { kind: GeneratorKind::Face, level, index: v });
    }
    word
}

/// Composes a word given in application order. `start` is the source object,
/// needed when the word is empty.
pub fn recompose(start: usize, word: &[Generator]) -> Result<OrdinalMap> {
    let mut acc = OrdinalMap::identity(start);
    for g in word {
        acc = compose_ordinal(&g.to_map(), &acc)?;
    }
    Ok(acc)
}

/// `|Mon([n],[m])| = C(n+m+1, n+1)`.
pub fn count_monotone(n: usize, m: usize) -> u128 {
    binomial((n + m + 1) as u64, (n + 1) as u64)
}

/// All monotone maps `[n] → [m]` in lexicographic order of images.
pub fn enumerate_monotone(n: usize, m: usize) -> Result<Vec<OrdinalMap>> {
    enumerate_monotone_bounded(n, m, DEFAULT_LIMIT)
}

pub fn enumerate_monotone_bounded(n: usize, m: usize, limit: u128) -> Result<Vec<OrdinalMap>> {
    let needed = count_monotone(n, m);
    if needed > limit {
        return Err(Error::ResourceLimit { what: "monotone maps", needed, limit });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut images = vec![0usize; n + 1];
    loop {
        out.push(OrdinalMap { src: n, tgt: m, images: images.clone() });
        // next weakly increasing sequence in lexicographic order
        let Some(pos) = (0..=n).rev().find(|&i| images[i] < m) else {
            break;
        };
        let v = images[pos] + 1;
        for x in &mut images[pos..] {
            *x = v;
        }
    }
    Ok(out)
}

/// An endpoint-preserving monotone map `[src] → [tgt]`, a morphism of ∇.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawNabla", into = "RawNabla")]
pub struct EndpointMap(OrdinalMap);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNabla {
    cat: String,
    src: usize,
    tgt: usize,
    images: Vec<i64>,
}

impl TryFrom<RawNabla> for EndpointMap {
    type Error = Error;

    fn try_from(raw: RawNabla) -> Result<Self> {
        if raw.cat != "nabla" {
            return Err(Error::Parse(format!("expected cat \"nabla\", found {:?}", raw.cat)));
        }
        EndpointMap::new(raw.src, raw.tgt, raw.images)
    }
}

impl From<EndpointMap> for RawNabla {
    fn from(g: EndpointMap) -> Self {
        let RawDelta { src, tgt, images, .. } = g.0.into();
        RawNabla { cat: "nabla".into(), src, tgt, images }
    }
}

impl EndpointMap {
    pub fn new(src: usize, tgt: usize, images: Vec<i64>) -> Result<Self> {
        if src == 0 || tgt == 0 {
            return Err(Error::NotEndpointPreserving { src, tgt });
        }
        let images = check_images(src, tgt, &images)?;
        if images[0] != 0 || images[src] != tgt {
            return Err(Error::NotEndpointPreserving { src, tgt });
        }
        Ok(EndpointMap(OrdinalMap { src, tgt, images }))
    }

    pub fn as_ordinal(&self) -> &OrdinalMap {
        &self.0
    }

    pub fn src(&self) -> usize {
        self.0.src
    }

    pub fn tgt(&self) -> usize {
        self.0.tgt
    }

    pub fn images(&self) -> &[usize] {
        &self.0.images
    }

    pub fn compose(&self, f: &EndpointMap) -> Result<EndpointMap> {
        compose_ordinal(&self.0, &f.0).map(EndpointMap)
    }
}

/// Interstice duality Δ → ∇^op: `f : [n] → [m]` goes to
/// `g : [m+1] → [n+1]`, `g(j) = #{ i : f(i) < j }`.
pub fn interval_dual(f: &OrdinalMap) -> EndpointMap {
    let images = (0..=f.tgt + 1).map(|j| f.images.iter().filter(|&&v| v < j).count()).collect();
    EndpointMap(OrdinalMap { src: f.tgt + 1, tgt: f.src + 1, images })
}

/// Inverse of [`interval_dual`]: `f(i) = #{ j ∈ 1..=m : g(j) ≤ i }`.
pub fn interval_dual_inv(g: &EndpointMap) -> OrdinalMap {
    let m = g.src() - 1;
    let n = g.tgt() - 1;
    let images = (0..=n).map(|i| (1..=m).filter(|&j| g.images()[j] <= i).count()).collect();
    OrdinalMap { src: n, tgt: m, images }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: usize, m: usize, im: &[i64]) -> OrdinalMap {
        OrdinalMap::new(n, m, im.to_vec()).unwrap()
    }

    #[test]
    fn constructor_examples() {
        assert!(map(1, 1, &[0, 1]).is_identity());
        assert_eq!(OrdinalMap::new(1, 1, vec![1, 0]), Err(Error::NotMonotone { index: 1 }));
        assert_eq!(map(2, 3, &[0, 2, 2]).images(), &[0, 2, 2]);
        assert_eq!(OrdinalMap::new(1, 1, vec![0]), Err(Error::WrongLength { expected: 2, found: 1 }));
        assert_eq!(OrdinalMap::new(1, 1, vec![0, 2]), Err(Error::OutOfRange { index: 1, value: 2, bound: 1 }));
        assert!(matches!(OrdinalMap::new(0, 1, vec![-1]), Err(Error::OutOfRange { index: 0, .. })));
    }

    #[test]
    fn generators() {
        assert_eq!(face(2, 1).unwrap().images(), &[0, 2]);
        assert_eq!(degeneracy(1, 0).unwrap().images(), &[0, 0, 1]);
        assert_eq!(face(1, 0).unwrap().images(), &[1]);
        assert!(face(0, 0).is_err());
        assert!(face(2, 3).is_err());
        assert!(degeneracy(1, 2).is_err());
    }

    #[test]
    fn composition_examples() {
        let id0 = compose_ordinal(&degeneracy(0, 0).unwrap(), &face(1, 0).unwrap()).unwrap();
        assert!(id0.is_identity());
        let c = compose_ordinal(&face(2, 2).unwrap(), &face(1, 0).unwrap()).unwrap();
        assert_eq!((c.src(), c.tgt(), c.images()), (0, 2, &[1][..]));
        let f = map(2, 3, &[0, 2, 2]);
        assert_eq!(compose_ordinal(&OrdinalMap::identity(3), &f).unwrap(), f);
        assert_eq!(compose_ordinal(&f, &f), Err(Error::DegreeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn decomposition_examples() {
        assert!(decompose_generators(&OrdinalMap::identity(3)).is_empty());
        assert_eq!(
            decompose_generators(&face(2, 1).unwrap()),
            vec![Generator { kind: GeneratorKind::Face, level: 2, index: 1 }]
        );
        let f = map(1, 1, &[0, 0]);
        let word = decompose_generators(&f);
        assert_eq!(
            word,
            vec![
                Generator { kind: GeneratorKind::Degeneracy, level: 0, index: 0 },
                Generator { kind: GeneratorKind::Face, level: 1, index: 1 },
            ]
        );
        assert_eq!(recompose(1, &word).unwrap(), f);
    }

    #[test]
    fn decomposition_round_trips() {
        for n in 0..=5 {
            for m in 0..=5 {
                for f in enumerate_monotone(n, m).unwrap() {
                    let word = decompose_generators(&f);
                    assert_eq!(recompose(n, &word).unwrap(), f);
                    // canonical order
                    let split = word.iter().position(|g| g.kind == GeneratorKind::Face).unwrap_or(word.len());
                    assert!(word[..split].iter().all(|g| g.kind == GeneratorKind::Degeneracy));
                    assert!(word[..split].windows(2).all(|w| w[0].index > w[1].index));
                    assert!(word[split..].windows(2).all(|w| w[0].index < w[1].index));
                }
            }
        }
    }

    /// Brute force over all sequences in `[0,m]^{n+1}`.
    fn brute_monotone(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = (m + 1).pow(n as u32 + 1);
        for mut code in 0..total {
            let mut seq = vec![0; n + 1];
            for slot in seq.iter_mut().rev() {
                *slot = code % (m + 1);
                code /= m + 1;
            }
            if seq.windows(2).all(|w| w[0] <= w[1]) {
                out.push(seq);
            }
        }
        out
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_monotone(0, 4).unwrap().len(), 5);
        let maps: Vec<_> = enumerate_monotone(1, 1).unwrap().into_iter().map(|f| f.images().to_vec()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(enumerate_monotone(2, 2).unwrap().len(), 10);
        for n in 0..=4 {
            for m in 0..=4 {
                let ours: Vec<_> = enumerate_monotone(n, m).unwrap().into_iter().map(|f| f.images().to_vec()).collect();
                assert_eq!(ours, brute_monotone(n, m));
            }
        }
        assert!(matches!(enumerate_monotone_bounded(3, 3, 10), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=8 {
            for m in 0..=8 {
                assert_eq!(enumerate_monotone(n, m).unwrap().len() as u128, count_monotone(n, m));
            }
        }
    }

    #[test]
    fn interval_dual_examples() {
        let g = interval_dual(&OrdinalMap::identity(1));
        assert_eq!((g.src(), g.tgt(), g.images()), (2, 2, &[0, 1, 2][..]));
        let g = interval_dual(&map(1, 0, &[0, 0]));
        assert_eq!((g.src(), g.tgt(), g.images()), (1, 2, &[0, 2][..]));
        assert!(EndpointMap::new(2, 2, vec![0, 1, 1]).is_err());
        assert!(EndpointMap::new(0, 0, vec![0]).is_err());
    }

    #[test]
    fn interval_dual_round_trip() {
        for n in 0..=3 {
            for m in 0..=3 {
                for f in enumerate_monotone(n, m).unwrap() {
                    assert_eq!(interval_dual_inv(&interval_dual(&f)), f);
                }
            }
        }
    }

    #[test]
    fn simplicial_identities() {
        let d = |n, i| face(n, i).unwrap();
        let s = |n, i| degeneracy(n, i).unwrap();
        let c = |g: &OrdinalMap, f: &OrdinalMap| compose_ordinal(g, f).unwrap();
        for n in 2..=8 {
            for j in 0..=n {
                for i in 0..j {
                    assert_eq!(c(&d(n, j), &d(n - 1, i)), c(&d(n, i), &d(n - 1, j - 1)));
                }
            }
        }
        for n in 0..=8 {
            for j in 0..=n {
                for i in 0..=j {
                    assert_eq!(c(&s(n, j), &s(n + 1, i)), c(&s(n, i), &s(n + 1, j + 1)));
                }
            }
        }
        for n in 1..=8 {
            // s_j : [n] → [n-1], d_i : [n-1] → [n]
            for j in 0..n {
                for i in 0..=n {
                    let lhs = c(&s(n - 1, j), &d(n, i));
                    if i < j {
                        assert_eq!(lhs, c(&d(n - 1, i), &s(n - 2, j - 1)));
                    } else if i == j || i == j + 1 {
                        assert!(lhs.is_identity());
                    } else {
                        assert_eq!(lhs, c(&d(n - 1, i - 1), &s(n - 2, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(13, 7), 1716);
    }
}
