//! Finite truncated simplicial and cyclic sets.
//!
//! A presheaf truncated at `N` stores its level cardinalities and dense
//! operator tables: faces `d[n][i] : X_n → X_{n−1}`, degeneracies
//! `s[n][i] : X_n → X_{n+1}` for `n < N` and, for cyclic sets, rotations
//! `t[n] : X_n → X_n`. Elements are plain indices `0..card[n]`.

mod bi;
mod colimit;
mod constructions;
mod maps;
mod nerve;

pub use bi::{biproduct_generator, BiArrow, FinBiPresheaf, GeneratorKind};
pub use colimit::{colimit, generated_subobject, pushout, restrict, Colimit, Diagram};
pub use constructions::{
    boundary_faces, boundary_latch, cyclic_horn, kan_extend, representable_cyclic, representable_cyclic_elements,
    representable_simplicial, representable_simplicial_elements, spine, triangulation_object, yoneda_cyclic,
    yoneda_simplicial, Flavor, FlavoredArrow, KanExtension,
};
pub use maps::{compose_maps, identity_map, is_natural, MapSearch};
pub use nerve::{cyclic_nerve, nerve, FiniteCategory};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::delta::{decompose_generators, GeneratorKind as Gen, OrdinalMap};
use crate::error::{Error, Result};
use crate::lambda::{canonical_factor, CyclicMap};

/// Which generator an operator table realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpLabel {
    Face { level: usize, index: usize },
    Degeneracy { level: usize, index: usize },
    Rotation { level: usize },
}

/// A borrowed operator table `X_from → X_to`.
#[derive(Debug, Clone, Copy)]
pub struct Operator<'a> {
    pub label: OpLabel,
    pub from: usize,
    pub to: usize,
    pub table: &'a [usize],
}

/// Interface shared by the two presheaf flavors so that subobjects,
/// colimits and map searches are written once.
///
/// `operators` lists every table in a canonical order that depends only on
/// the truncation; `from_operator_tables` consumes tables in the same order.
pub trait FinPresheaf: Clone + fmt::Debug + PartialEq {
    fn truncation(&self) -> usize;
    fn cards(&self) -> &[usize];
    fn operators(&self) -> Vec<Operator<'_>>;
    fn from_operator_tables(truncation: usize, card: Vec<usize>, tables: Vec<Vec<usize>>) -> Self;
    fn validate(&self) -> Vec<Violation>;

    fn card(&self, n: usize) -> usize {
        self.cards()[n]
    }

    fn total_size(&self) -> usize {
        self.cards().iter().sum()
    }

    fn empty(truncation: usize) -> Self;
}

/// One failed identity, with the indices and element that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub level: usize,
    pub indices: Vec<usize>,
    pub element: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at level {} indices {:?} element {}", self.rule, self.level, self.indices, self.element)
    }
}

/// A truncated simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSimplicial", into = "RawSimplicial")]
pub struct FinSimplicialSet {
    truncation: usize,
    card: Vec<usize>,
    d: Vec<Vec<Vec<usize>>>,
    s: Vec<Vec<Vec<usize>>>,
}

/// A truncated cyclic set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCyclic", into = "RawCyclic")]
pub struct FinCyclicSet {
    base: FinSimplicialSet,
    t: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSimplicial {
    kind: String,
    truncation: usize,
    card: Vec<usize>,
    d: Vec<Vec<Vec<usize>>>,
    s: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCyclic {
    kind: String,
    truncation: usize,
    card: Vec<usize>,
    d: Vec<Vec<Vec<usize>>>,
    s: Vec<Vec<Vec<usize>>>,
    t: Vec<Vec<usize>>,
}

impl TryFrom<RawSimplicial> for FinSimplicialSet {
    type Error = Error;

    fn try_from(raw: RawSimplicial) -> Result<Self> {
        if raw.kind != "simplicial-set" {
            return Err(Error::Parse(format!("expected kind \"simplicial-set\", found {:?}", raw.kind)));
        }
        FinSimplicialSet::new(raw.truncation, raw.card, raw.d, raw.s)
    }
}

impl From<FinSimplicialSet> for RawSimplicial {
    fn from(x: FinSimplicialSet) -> Self {
        RawSimplicial { kind: "simplicial-set".into(), truncation: x.truncation, card: x.card, d: x.d, s: x.s }
    }
}

impl TryFrom<RawCyclic> for FinCyclicSet {
    type Error = Error;

    fn try_from(raw: RawCyclic) -> Result<Self> {
        if raw.kind != "cyclic-set" {
            return Err(Error::Parse(format!("expected kind \"cyclic-set\", found {:?}", raw.kind)));
        }
        FinCyclicSet::new(raw.truncation, raw.card, raw.d, raw.s, raw.t)
    }
}

impl From<FinCyclicSet> for RawCyclic {
    fn from(x: FinCyclicSet) -> Self {
        let b = x.base;
        RawCyclic { kind: "cyclic-set".into(), truncation: b.truncation, card: b.card, d: b.d, s: b.s, t: x.t }
    }
}

fn violations_to_error(report: Vec<Violation>) -> Result<()> {
    match report.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidPresheaf(format!("{v} ({} violations)", report.len()))),
    }
}

fn shape_violation(rule: impl Into<String>, level: usize, indices: Vec<usize>) -> Vec<Violation> {
    vec![Violation { rule: rule.into(), level, indices, element: 0 }]
}

impl FinSimplicialSet {
    /// Validated constructor.
    pub fn new(truncation: usize, card: Vec<usize>, d: Vec<Vec<Vec<usize>>>, s: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let x = Self::new_unchecked(truncation, card, d, s);
        violations_to_error(x.validate())?;
        Ok(x)
    }

    /// Stores the tables as given; call [`FinPresheaf::validate`] for a report.
    pub fn new_unchecked(
        truncation: usize,
        card: Vec<usize>,
        d: Vec<Vec<Vec<usize>>>,
        s: Vec<Vec<Vec<usize>>>,
    ) -> Self {
        FinSimplicialSet { truncation, card, d, s }
    }

    /// The constant presheaf on a set of the given size.
    pub fn constant(size: usize, truncation: usize) -> Self {
        let id: Vec<usize> = (0..size).collect();
        FinSimplicialSet {
            truncation,
            card: vec![size; truncation + 1],
            d: (0..=truncation).map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] }).collect(),
            s: (0..=truncation).map(|n| if n == truncation { vec![] } else { vec![id.clone(); n + 1] }).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn card(&self, n: usize) -> usize {
        self.card[n]
    }

    pub fn cards(&self) -> &[usize] {
        &self.card
    }

    /// `d_i : X_n → X_{n−1}`.
    pub fn d(&self, n: usize, i: usize) -> &[usize] {
        &self.d[n][i]
    }

    /// `s_i : X_n → X_{n+1}`.
    pub fn s(&self, n: usize, i: usize) -> &[usize] {
        &self.s[n][i]
    }

    fn shape_report(&self) -> Vec<Violation> {
        let n_top = self.truncation;
        if self.card.len() != n_top + 1 {
            return shape_violation("card has wrong length", 0, vec![self.card.len()]);
        }
        if self.d.len() != n_top + 1 || self.s.len() != n_top + 1 {
            return shape_violation("operator tables have wrong number of levels", 0, vec![self.d.len(), self.s.len()]);
        }
        for n in 0..=n_top {
            let faces = if n == 0 { 0 } else { n + 1 };
            if self.d[n].len() != faces {
                return shape_violation("wrong number of face tables", n, vec![self.d[n].len()]);
            }
            for (i, table) in self.d[n].iter().enumerate() {
                if table.len() != self.card[n] {
                    return shape_violation("face table has wrong length", n, vec![i]);
                }
                if let Some(x) = table.iter().position(|&v| v >= self.card[n - 1]) {
                    return vec![Violation {
                        rule: "face value out of range".into(),
                        level: n,
                        indices: vec![i],
                        element: x,
                    }];
                }
            }
            let degs = if n == n_top { 0 } else { n + 1 };
            if self.s[n].len() != degs {
                return shape_violation("wrong number of degeneracy tables", n, vec![self.s[n].len()]);
            }
            for (i, table) in self.s[n].iter().enumerate() {
                if table.len() != self.card[n] {
                    return shape_violation("degeneracy table has wrong length", n, vec![i]);
                }
                if let Some(x) = table.iter().position(|&v| v >= self.card[n + 1]) {
                    return vec![Violation {
                        rule: "degeneracy value out of range".into(),
                        level: n,
                        indices: vec![i],
                        element: x,
                    }];
                }
            }
        }
        Vec::new()
    }

    fn identity_report(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let top = self.truncation;
        let (d, s) = (&self.d, &self.s);
        let mut push = |rule: &str, level, indices: Vec<usize>, element| {
            out.push(Violation { rule: rule.into(), level, indices, element })
        };
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    for x in 0..self.card[n] {
                        if d[n - 1][i][d[n][j][x]] != d[n - 1][j - 1][d[n][i][x]] {
                            push("d_i d_j = d_{j-1} d_i", n, vec![i, j], x);
                        }
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for x in 0..self.card[n] {
                        if s[n + 1][i][s[n][j][x]] != s[n + 1][j + 1][s[n][i][x]] {
                            push("s_i s_j = s_{j+1} s_i", n, vec![i, j], x);
                        }
                    }
                }
            }
        }
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for x in 0..self.card[n] {
                        let lhs = d[n + 1][i][s[n][j][x]];
                        let (rhs, rule) = if i < j {
                            (s[n - 1][j - 1][d[n][i][x]], "d_i s_j = s_{j-1} d_i")
                        } else if i == j || i == j + 1 {
                            (x, "d_i s_j = id")
                        } else {
                            (s[n - 1][j][d[n][i - 1][x]], "d_i s_j = s_j d_{i-1}")
                        };
                        if lhs != rhs {
                            push(rule, n, vec![i, j], x);
                        }
                    }
                }
            }
        }
        out
    }

    /// Elements of level `n` in the image of some degeneracy.
    pub fn degenerate_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; self.card[n]];
        if n > 0 {
            for table in &self.s[n - 1] {
                for &v in table {
                    mask[v] = true;
                }
            }
        }
        mask
    }

    /// Nondegenerate elements per level; the top level must be entirely
    /// degenerate so that no cells are cut off by the truncation.
    pub fn nondegenerate_counts(&self) -> Result<Vec<usize>> {
        let counts: Vec<usize> =
            (0..=self.truncation).map(|n| self.degenerate_mask(n).iter().filter(|&&b| !b).count()).collect();
        let top = counts[self.truncation];
        if top > 0 {
            return Err(Error::TruncationTooLow { level: self.truncation, count: top });
        }
        Ok(counts)
    }

    /// Alternating sum of nondegenerate counts.
    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self
            .nondegenerate_counts()?
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// `X(f) : X_m → X_n` for a monotone `f : [n] → [m]`.
    pub fn evaluate(&self, f: &OrdinalMap) -> Result<Vec<usize>> {
        let top = f.src().max(f.tgt());
        if top > self.truncation {
            return Err(Error::TruncationExceeded { degree: top, truncation: self.truncation });
        }
        let mut table: Vec<usize> = (0..self.card[f.tgt()]).collect();
        // the word lists generators in application order, so X applies them in reverse
        for g in decompose_generators(f).iter().rev() {
            let op = match g.kind {
                Gen::Face => &self.d[g.level][g.index],
                Gen::Degeneracy => &self.s[g.level][g.index],
            };
            table = table.iter().map(|&x| op[x]).collect();
        }
        Ok(table)
    }

    /// Truncate to a lower level.
    pub fn truncate(&self, truncation: usize) -> Result<Self> {
        if truncation > self.truncation {
            return Err(Error::TruncationExceeded { degree: truncation, truncation: self.truncation });
        }
        let mut s = self.s[..=truncation].to_vec();
        s[truncation].clear();
        Ok(FinSimplicialSet {
            truncation,
            card: self.card[..=truncation].to_vec(),
            d: self.d[..=truncation].to_vec(),
            s,
        })
    }
}

impl FinCyclicSet {
    /// Validated constructor.
    pub fn new(
        truncation: usize,
        card: Vec<usize>,
        d: Vec<Vec<Vec<usize>>>,
        s: Vec<Vec<Vec<usize>>>,
        t: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let x = Self::new_unchecked(truncation, card, d, s, t);
        violations_to_error(x.validate())?;
        Ok(x)
    }

    pub fn new_unchecked(
        truncation: usize,
        card: Vec<usize>,
        d: Vec<Vec<Vec<usize>>>,
        s: Vec<Vec<Vec<usize>>>,
        t: Vec<Vec<usize>>,
    ) -> Self {
        FinCyclicSet { base: FinSimplicialSet::new_unchecked(truncation, card, d, s), t }
    }

    /// The constant cyclic set on a set of the given size.
    pub fn constant(size: usize, truncation: usize) -> Self {
        FinCyclicSet {
            base: FinSimplicialSet::constant(size, truncation),
            t: vec![(0..size).collect(); truncation + 1],
        }
    }

    pub fn truncation(&self) -> usize {
        self.base.truncation
    }

    pub fn card(&self, n: usize) -> usize {
        self.base.card[n]
    }

    pub fn d(&self, n: usize, i: usize) -> &[usize] {
        self.base.d(n, i)
    }

    pub fn s(&self, n: usize, i: usize) -> &[usize] {
        self.base.s(n, i)
    }

    /// `t_n : X_n → X_n`.
    pub fn t(&self, n: usize) -> &[usize] {
        &self.t[n]
    }

    pub fn base(&self) -> &FinSimplicialSet {
        &self.base
    }

    /// The restriction `j^*X` to a simplicial set.
    pub fn underlying_simplicial(&self) -> FinSimplicialSet {
        self.base.clone()
    }

    fn cyclic_report(&self) -> Vec<Violation> {
        let top = self.truncation();
        if self.t.len() != top + 1 {
            return shape_violation("rotation tables have wrong number of levels", 0, vec![self.t.len()]);
        }
        for n in 0..=top {
            if self.t[n].len() != self.card(n) {
                return shape_violation("rotation table has wrong length", n, vec![]);
            }
            if let Some(x) = self.t[n].iter().position(|&v| v >= self.card(n)) {
                return vec![Violation {
                    rule: "rotation value out of range".into(),
                    level: n,
                    indices: vec![],
                    element: x,
                }];
            }
        }
        let mut out = Vec::new();
        let (d, s, t) = (&self.base.d, &self.base.s, &self.t);
        let mut push = |rule: &str, level, indices: Vec<usize>, element| {
            out.push(Violation { rule: rule.into(), level, indices, element })
        };
        for n in 0..=top {
            for x in 0..self.card(n) {
                let mut y = x;
                for _ in 0..=n {
                    y = t[n][y];
                }
                if y != x {
                    push("t^{n+1} = id", n, vec![], x);
                }
                if n >= 1 {
                    if d[n][0][t[n][x]] != d[n][n][x] {
                        push("d_0 t = d_n", n, vec![0], x);
                    }
                    for i in 1..=n {
                        if d[n][i][t[n][x]] != t[n - 1][d[n][i - 1][x]] {
                            push("d_i t = t d_{i-1}", n, vec![i], x);
                        }
                    }
                }
                if n < top {
                    if s[n][0][t[n][x]] != t[n + 1][t[n + 1][s[n][n][x]]] {
                        push("s_0 t = t^2 s_n", n, vec![0], x);
                    }
                    for i in 1..=n {
                        if s[n][i][t[n][x]] != t[n + 1][s[n][i - 1][x]] {
                            push("s_i t = t s_{i-1}", n, vec![i], x);
                        }
                    }
                }
            }
        }
        out
    }

    /// `X(φ) : X_n → X_k` for `φ : ⟨k⟩ → ⟨n⟩`, as `t_k^r ∘ X(ι f)` where
    /// `φ = ι(f) ∘ τ^r`.
    pub fn evaluate(&self, phi: &CyclicMap) -> Result<Vec<usize>> {
        let pair = canonical_factor(phi);
        let mut table = self.base.evaluate(&pair.delta)?;
        let k = phi.src();
        for _ in 0..pair.rot {
            table = table.iter().map(|&x| self.t[k][x]).collect();
        }
        Ok(table)
    }

    pub fn nondegenerate_counts(&self) -> Result<Vec<usize>> {
        self.base.nondegenerate_counts()
    }

    pub fn truncate(&self, truncation: usize) -> Result<Self> {
        Ok(FinCyclicSet { base: self.base.truncate(truncation)?, t: self.t[..=truncation].to_vec() })
    }
}

fn simplicial_operators(x: &FinSimplicialSet) -> Vec<Operator<'_>> {
    let mut ops = Vec::new();
    for n in 0..=x.truncation {
        for (i, table) in x.d[n].iter().enumerate() {
            ops.push(Operator { label: OpLabel::Face { level: n, index: i }, from: n, to: n - 1, table });
        }
        for (i, table) in x.s[n].iter().enumerate() {
            ops.push(Operator { label: OpLabel::Degeneracy { level: n, index: i }, from: n, to: n + 1, table });
        }
    }
    ops
}

/// Splits a flat table list (canonical order) into face and degeneracy arrays.
/// Face or degeneracy tables, indexed by level then operator.
type Tables = Vec<Vec<Vec<usize>>>;

fn split_simplicial_tables(
    truncation: usize,
    tables: &mut impl Iterator<Item = Vec<usize>>,
    mut after_level: impl FnMut(usize, &mut dyn Iterator<Item = Vec<usize>>),
) -> (Tables, Tables) {
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let faces = if n == 0 { 0 } else { n + 1 };
        let degs = if n == truncation { 0 } else { n + 1 };
        d.push(tables.by_ref().take(faces).collect());
        s.push(tables.by_ref().take(degs).collect());
        after_level(n, tables);
    }
    (d, s)
}

impl FinPresheaf for FinSimplicialSet {
    fn truncation(&self) -> usize {
        self.truncation
    }

    fn cards(&self) -> &[usize] {
        &self.card
    }

    fn operators(&self) -> Vec<Operator<'_>> {
        simplicial_operators(self)
    }

    fn from_operator_tables(truncation: usize, card: Vec<usize>, tables: Vec<Vec<usize>>) -> Self {
        let mut it = tables.into_iter().chain(std::iter::repeat(Vec::new()));
        let (d, s) = split_simplicial_tables(truncation, &mut it, |_, _| {});
        FinSimplicialSet { truncation, card, d, s }
    }

    fn validate(&self) -> Vec<Violation> {
        let shape = self.shape_report();
        if !shape.is_empty() {
            return shape;
        }
        self.identity_report()
    }

    fn empty(truncation: usize) -> Self {
        Self::from_operator_tables(truncation, vec![0; truncation + 1], Vec::new())
    }
}

impl FinPresheaf for FinCyclicSet {
    fn truncation(&self) -> usize {
        self.base.truncation
    }

    fn cards(&self) -> &[usize] {
        &self.base.card
    }

    fn operators(&self) -> Vec<Operator<'_>> {
        let mut ops = Vec::new();
        let base_ops = simplicial_operators(&self.base);
        let mut it = base_ops.into_iter().peekable();
        for n in 0..=self.truncation() {
            while let Some(op) = it.next_if(|op| op.from == n) {
                ops.push(op);
            }
            ops.push(Operator { label: OpLabel::Rotation { level: n }, from: n, to: n, table: &self.t[n] });
        }
        ops
    }

    fn from_operator_tables(truncation: usize, card: Vec<usize>, tables: Vec<Vec<usize>>) -> Self {
        let mut it = tables.into_iter().chain(std::iter::repeat(Vec::new()));
        let mut t = Vec::with_capacity(truncation + 1);
        let (d, s) = split_simplicial_tables(truncation, &mut it, |_, rest| t.push(rest.next().unwrap_or_default()));
        FinCyclicSet { base: FinSimplicialSet { truncation, card, d, s }, t }
    }

    fn validate(&self) -> Vec<Violation> {
        let shape = self.base.shape_report();
        if !shape.is_empty() {
            return shape;
        }
        let mut report = self.base.identity_report();
        report.extend(self.cyclic_report());
        report
    }

    fn empty(truncation: usize) -> Self {
        Self::from_operator_tables(truncation, vec![0; truncation + 1], Vec::new())
    }
}

/// A natural transformation, stored as one function table per level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct PresheafMap {
    pub levels: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    kind: String,
    levels: Vec<Vec<usize>>,
}

impl TryFrom<RawMap> for PresheafMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        if raw.kind != "presheaf-map" {
            return Err(Error::Parse(format!("expected kind \"presheaf-map\", found {:?}", raw.kind)));
        }
        Ok(PresheafMap { levels: raw.levels })
    }
}

impl From<PresheafMap> for RawMap {
    fn from(m: PresheafMap) -> Self {
        RawMap { kind: "presheaf-map".into(), levels: m.levels }
    }
}

impl PresheafMap {
    pub fn new(levels: Vec<Vec<usize>>) -> Self {
        PresheafMap { levels }
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|level| {
            let mut seen = std::collections::HashSet::new();
            level.iter().all(|v| seen.insert(*v))
        })
    }

    pub fn is_surjective_onto(&self, cards: &[usize]) -> bool {
        self.levels.iter().zip(cards).all(|(level, &c)| {
            let mut hit = vec![false; c];
            level.iter().for_each(|&v| hit[v] = true);
            hit.into_iter().all(|b| b)
        })
    }
}

/// A map together with its source and target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Arrow<P> {
    pub source: P,
    pub target: P,
    pub map: PresheafMap,
}

impl<P: FinPresheaf> Arrow<P> {
    /// Checks shapes and naturality.
    pub fn new(source: P, target: P, map: PresheafMap) -> Result<Self> {
        if !is_natural(&source, &target, &map) {
            return Err(Error::InvalidMap("not a natural transformation between the given presheaves".into()));
        }
        Ok(Arrow { source, target, map })
    }

    pub fn identity(x: P) -> Self {
        let map = identity_map(&x);
        Arrow { source: x.clone(), target: x, map }
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.map.is_injective()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.map.is_injective() && self.map.is_surjective_onto(self.target.cards())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Arrow<P>) -> Result<Arrow<P>> {
        if self.target != other.source {
            return Err(Error::InvalidMap("arrows are not composable".into()));
        }
        Ok(Arrow {
            source: self.source.clone(),
            target: other.target.clone(),
            map: compose_maps(&other.map, &self.map),
        })
    }
}
