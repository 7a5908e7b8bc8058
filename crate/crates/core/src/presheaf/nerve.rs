//! Nerves of finite categories and cyclic nerves of finite monoids.

use std::collections::HashMap;

use super::{FinCyclicSet, FinSimplicialSet};
use crate::error::{Error, Result};

/// A finite category given by its morphisms and a partial composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// `then[f][g]` is "`f` followed by `g`", defined when `tgt f = src g`.
    then: Vec<Vec<Option<usize>>>,
}

/// Finds the two-sided identity of a multiplication table and checks
/// associativity.
fn monoid_identity(table: &[Vec<usize>]) -> Result<usize> {
    let k = table.len();
    if k == 0 || table.iter().any(|row| row.len() != k || row.iter().any(|&v| v >= k)) {
        return Err(Error::Parse("multiplication table must be a nonempty square table with entries in range".into()));
    }
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    (0..k).find(|&e| (0..k).all(|a| table[e][a] == a && table[a][e] == a)).ok_or(Error::NoIdentity)
}

impl FiniteCategory {
    /// A one-object category; `table[a][b] = a·b` is "`a` followed by `b`".
    pub fn monoid(table: &[Vec<usize>]) -> Result<Self> {
        let e = monoid_identity(table)?;
        let k = table.len();
        Ok(FiniteCategory {
            objects: 1,
            src: vec![0; k],
            tgt: vec![0; k],
            identity: vec![e],
            then: table.iter().map(|row| row.iter().map(|&v| Some(v)).collect()).collect(),
        })
    }

    /// The cyclic group `ℤ/k` as a one-object category.
    pub fn cyclic_group(k: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        Self::monoid(&table).expect("cyclic groups are monoids")
    }

    /// A preorder on `0..objects`; `leq[a][b]` means an arrow `a → b`. The
    /// relation must be reflexive and transitive.
    pub fn preorder(leq: &[Vec<bool>]) -> Result<Self> {
        let k = leq.len();
        if leq.iter().any(|row| row.len() != k) {
            return Err(Error::Parse("relation must be square".into()));
        }
        if let Some(a) = (0..k).find(|&a| !leq[a][a]) {
            return Err(Error::Parse(format!("relation is not reflexive at {a}")));
        }
        let mut arrows = Vec::new();
        let mut id = HashMap::new();
        for a in 0..k {
            for b in 0..k {
                if leq[a][b] {
                    id.insert((a, b), arrows.len());
                    arrows.push((a, b));
                }
            }
        }
        let mut then = vec![vec![None; arrows.len()]; arrows.len()];
        for (f, &(a, b)) in arrows.iter().enumerate() {
            for (g, &(b2, c)) in arrows.iter().enumerate() {
                if b == b2 {
                    let Some(&h) = id.get(&(a, c)) else {
                        return Err(Error::Parse(format!("relation is not transitive at ({a}, {b}, {c})")));
                    };
                    then[f][g] = Some(h);
                }
            }
        }
        Ok(FiniteCategory {
            objects: k,
            src: arrows.iter().map(|p| p.0).collect(),
            tgt: arrows.iter().map(|p| p.1).collect(),
            identity: (0..k).map(|a| id[&(a, a)]).collect(),
            then,
        })
    }

    /// The linear order `[n]` as a category.
    pub fn linear_order(n: usize) -> Self {
        let leq: Vec<Vec<bool>> = (0..=n).map(|a| (0..=n).map(|b| a <= b).collect()).collect();
        Self::preorder(&leq).expect("linear orders are preorders")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.src.len()
    }
}

/// The nerve: level `k` is the set of chains of `k` composable morphisms,
/// listed lexicographically.
pub fn nerve(c: &FiniteCategory, truncation: usize) -> FinSimplicialSet {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..c.objects).map(|o| vec![o]).collect()];
    if truncation >= 1 {
        levels.push((0..c.morphisms()).map(|f| vec![f]).collect());
    }
    for _ in 2..=truncation {
        let prev = levels.last().unwrap();
        let next = prev
            .iter()
            .flat_map(|chain| {
                let end = c.tgt[*chain.last().unwrap()];
                (0..c.morphisms()).filter(move |&g| c.src[g] == end).map(move |g| [chain.clone(), vec![g]].concat())
            })
            .collect();
        levels.push(next);
    }
    let lookup: Vec<HashMap<Vec<usize>, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect()).collect();
    let vertex = |chain: &[usize], k: usize, i: usize| -> usize {
        if k == 0 {
            chain[0]
        } else if i < k {
            c.src[chain[i]]
        } else {
            c.tgt[chain[k - 1]]
        }
    };
    let face = |k: usize, i: usize, chain: &[usize]| -> Vec<usize> {
        if k == 1 {
            return vec![if i == 0 { c.tgt[chain[0]] } else { c.src[chain[0]] }];
        }
        let mut out = chain.to_vec();
        if i == 0 {
            out.remove(0);
        } else if i == k {
            out.pop();
        } else {
            let h = c.then[chain[i - 1]][chain[i]].expect("chain is composable");
            out.splice(i - 1..=i, [h]);
        }
        out
    };
    let degeneracy = |k: usize, i: usize, chain: &[usize]| -> Vec<usize> {
        let id = c.identity[vertex(chain, k, i)];
        if k == 0 {
            return vec![id];
        }
        let mut out = chain.to_vec();
        out.insert(i, id);
        out
    };
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        d.push(if k == 0 {
            vec![]
        } else {
            (0..=k).map(|i| levels[k].iter().map(|ch| lookup[k - 1][&face(k, i, ch)]).collect()).collect()
        });
        s.push(if k == truncation {
            vec![]
        } else {
            (0..=k).map(|i| levels[k].iter().map(|ch| lookup[k + 1][&degeneracy(k, i, ch)]).collect()).collect()
        });
    }
    FinSimplicialSet::new_unchecked(truncation, levels.iter().map(Vec::len).collect(), d, s)
}

/// The cyclic nerve of a finite monoid: level `k` is `M^{k+1}` with
/// `d_i` multiplying `g_i g_{i+1}` (and `g_k g_0` for `i = k`), `s_i`
/// inserting the unit after position `i`, and `t` moving the last entry to
/// the front.
pub fn cyclic_nerve(table: &[Vec<usize>], truncation: usize) -> Result<FinCyclicSet> {
    let e = monoid_identity(table)?;
    let q = table.len();
    let encode = |tuple: &[usize]| tuple.iter().fold(0, |acc, &g| acc * q + g);
    let decode = |mut code: usize, len: usize| {
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = code % q;
            code /= q;
        }
        out
    };
    let card: Vec<usize> = (0..=truncation).map(|k| q.pow(k as u32 + 1)).collect();
    let mut d = Vec::with_capacity(truncation + 1);
    let mut s = Vec::with_capacity(truncation + 1);
    let mut t = Vec::with_capacity(truncation + 1);
    for k in 0..=truncation {
        let tuples: Vec<Vec<usize>> = (0..card[k]).map(|x| decode(x, k + 1)).collect();
        d.push(if k == 0 {
            vec![]
        } else {
            (0..=k)
                .map(|i| {
                    tuples
                        .iter()
                        .map(|g| {
                            let mut out = g.clone();
                            if i < k {
                                let h = table[g[i]][g[i + 1]];
                                out.splice(i..=i + 1, [h]);
                            } else {
                                out[0] = table[g[k]][g[0]];
                                out.pop();
                            }
                            encode(&out)
                        })
                        .collect()
                })
                .collect()
        });
        s.push(if k == truncation {
            vec![]
        } else {
            (0..=k)
                .map(|i| {
                    tuples
                        .iter()
                        .map(|g| {
                            let mut out = g.clone();
                            out.insert(i + 1, e);
                            encode(&out)
                        })
                        .collect()
                })
                .collect()
        });
        t.push(
            tuples
                .iter()
                .map(|g| {
                    let mut out = g.clone();
                    out.rotate_right(1);
                    encode(&out)
                })
                .collect(),
        );
    }
    Ok(FinCyclicSet::new_unchecked(truncation, card, d, s, t))
}
