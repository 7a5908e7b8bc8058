//! Finite bi-presheaves: simplicial in one index, cyclic in the other.
//!
//! `Y[j][k]` is stored twice over the same element indices: row `j` is a
//! cyclic set in `k` and column `k` is a simplicial set in `j`.

use serde::Serialize;

use super::colimit::restrict;
use super::{boundary_faces, representable_cyclic, representable_simplicial_elements, FinPresheaf, Violation};
use super::{FinCyclicSet, FinSimplicialSet};
use crate::delta::OrdinalMap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FinBiPresheaf {
    pub rows: Vec<FinCyclicSet>,
    pub cols: Vec<FinSimplicialSet>,
}

impl FinBiPresheaf {
    pub fn card(&self, j: usize, k: usize) -> usize {
        self.rows[j].card(k)
    }

    /// Row/column consistency, each slice valid, and commutation of the
    /// simplicial and cyclic operators.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (rows, cols) = (&self.rows, &self.cols);
        for (j, row) in rows.iter().enumerate() {
            for (k, col) in cols.iter().enumerate() {
                if row.card(k) != col.card(j) {
                    out.push(Violation {
                        rule: "row and column cardinalities differ".into(),
                        level: j,
                        indices: vec![k],
                        element: 0,
                    });
                }
            }
            out.extend(row.validate());
        }
        for col in cols {
            out.extend(col.validate());
        }
        if !out.is_empty() {
            return out;
        }
        let row_ops: Vec<_> = rows.iter().map(|r| r.operators()).collect();
        let col_ops: Vec<_> = cols.iter().map(|c| c.operators()).collect();
        for j in 0..rows.len() {
            for k in 0..cols.len() {
                for (a, ca) in row_ops[j].iter().enumerate().filter(|(_, op)| op.from == k) {
                    for (b, sb) in col_ops[k].iter().enumerate().filter(|(_, op)| op.from == j) {
                        for x in 0..rows[j].card(k) {
                            let lhs = col_ops[ca.to][b].table[ca.table[x]];
                            let rhs = row_ops[sb.to][a].table[sb.table[x]];
                            if lhs != rhs {
                                out.push(Violation {
                                    rule: "simplicial and cyclic operators do not commute".into(),
                                    level: j,
                                    indices: vec![k, a, b],
                                    element: x,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Sub-bi-presheaf on the marked elements `keep[j][k][x]`.
    pub fn restrict(&self, keep: &[Vec<Vec<bool>>]) -> Result<BiArrow> {
        let rows =
            self.rows.iter().zip(keep).map(|(r, kj)| restrict(r, kj).map(|a| a.source)).collect::<Result<Vec<_>>>()?;
        let cols = (0..self.cols.len())
            .map(|k| {
                let kk: Vec<Vec<bool>> = keep.iter().map(|kj| kj[k].clone()).collect();
                restrict(&self.cols[k], &kk).map(|a| a.source)
            })
            .collect::<Result<Vec<_>>>()?;
        let levels = keep
            .iter()
            .map(|kj| kj.iter().map(|l| l.iter().enumerate().filter(|(_, &b)| b).map(|(x, _)| x).collect()).collect())
            .collect();
        Ok(BiArrow { source: FinBiPresheaf { rows, cols }, target: self.clone(), levels })
    }
}

/// A levelwise map of bi-presheaves, `levels[j][k][x]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BiArrow {
    pub source: FinBiPresheaf,
    pub target: FinBiPresheaf,
    pub levels: Vec<Vec<Vec<usize>>>,
}

impl BiArrow {
    pub fn is_levelwise_injective(&self) -> bool {
        self.levels.iter().flatten().all(|l| {
            let mut seen = std::collections::HashSet::new();
            l.iter().all(|v| seen.insert(*v))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `∂Δ[m]×C×Λ[n] ∪ Δ[m]×C×∂Λ[n] → Δ[m]×C×Λ[n]`.
    Cofibration,
    /// `V[m,k]×C×Λ[n] ∪ Δ[m]×C×∂Λ[n] → Δ[m]×C×Λ[n]`, with `V[m,k]` the
    /// simplicial horn.
    AcyclicCofibration { k: usize },
}

/// The generating map with `C = C_{n+1}` carrying the trivial action.
/// Truncations are `(simplicial, cyclic)`.
pub fn biproduct_generator(m: usize, n: usize, kind: GeneratorKind, truncations: (usize, usize)) -> Result<BiArrow> {
    let (tj, tk) = truncations;
    if let GeneratorKind::AcyclicCofibration { k } = kind {
        if k > m {
            return Err(Error::IndexOutOfRange { what: "horn vertex", index: k, bound: m });
        }
    }
    let delta = representable_simplicial_elements(m, tj)?;
    let delta_set = super::representable_simplicial(m, tj)?;
    let lambda = representable_cyclic(n, tk)?;
    let lambda_boundary = boundary_faces(n, tk)?;
    let c = n + 1;
    let index = |a: usize, g: usize, b: usize, k: usize| (a * c + g) * lambda.card(k) + b;

    let rows: Vec<FinCyclicSet> = (0..=tj)
        .map(|j| {
            let tables = lambda
                .operators()
                .iter()
                .map(|op| {
                    let mut table = vec![0; delta[j].len() * c * lambda.card(op.from)];
                    for a in 0..delta[j].len() {
                        for g in 0..c {
                            for b in 0..lambda.card(op.from) {
                                table[index(a, g, b, op.from)] = index(a, g, op.table[b], op.to);
                            }
                        }
                    }
                    table
                })
                .collect();
            let card = (0..=tk).map(|k| delta[j].len() * c * lambda.card(k)).collect();
            FinCyclicSet::from_operator_tables(tk, card, tables)
        })
        .collect();
    let cols: Vec<FinSimplicialSet> = (0..=tk)
        .map(|k| {
            let tables = delta_set
                .operators()
                .iter()
                .map(|op| {
                    let mut table = vec![0; delta[op.from].len() * c * lambda.card(k)];
                    for a in 0..delta[op.from].len() {
                        for g in 0..c {
                            for b in 0..lambda.card(k) {
                                table[index(a, g, b, k)] = index(op.table[a], g, b, k);
                            }
                        }
                    }
                    table
                })
                .collect();
            let card = (0..=tj).map(|j| delta[j].len() * c * lambda.card(k)).collect();
            FinSimplicialSet::from_operator_tables(tj, card, tables)
        })
        .collect();
    let target = FinBiPresheaf { rows, cols };

    let in_delta_part = |a: &OrdinalMap| -> bool {
        let mut hit = vec![false; m + 1];
        a.images().iter().for_each(|&v| hit[v] = true);
        match kind {
            GeneratorKind::Cofibration => hit.iter().any(|&h| !h),
            GeneratorKind::AcyclicCofibration { k } => (0..=m).any(|i| i != k && !hit[i]),
        }
    };
    let mut in_lambda_boundary: Vec<Vec<bool>> = (0..=tk).map(|k| vec![false; lambda.card(k)]).collect();
    for (k, level) in lambda_boundary.map.levels.iter().enumerate() {
        for &b in level {
            in_lambda_boundary[k][b] = true;
        }
    }
    let keep: Vec<Vec<Vec<bool>>> = (0..=tj)
        .map(|j| {
            (0..=tk)
                .map(|k| {
                    let mut level = vec![false; target.card(j, k)];
                    for (a, am) in delta[j].iter().enumerate() {
                        let side = in_delta_part(am);
                        for g in 0..c {
                            for b in 0..lambda.card(k) {
                                level[index(a, g, b, k)] = side || in_lambda_boundary[k][b];
                            }
                        }
                    }
                    level
                })
                .collect()
        })
        .collect();
    target.restrict(&keep)
}
