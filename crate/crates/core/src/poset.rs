//! Finite strict partial orders stored as their full (transitively closed)
//! relation, with the order-side counterparts of the graph primitives:
//! `inc(x)`, its components, modules and the `C_x` sets.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components_by_label, Graph, Partition, VertexId, VertexSet};

/// How `from_relations` reads its pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationMode {
    /// Any generating set; the transitive closure is taken.
    Covers,
    /// The input must already be the whole relation.
    Full,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poset {
    below: Vec<Vec<VertexId>>,
    above: Vec<Vec<VertexId>>,
}

/// Four elements `(a, b, c, d)` with `a < b`, `c < b`, `c < d` and no other
/// comparabilities among them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NWitness(pub [VertexId; 4]);

impl NWitness {
    pub fn is_valid(&self, p: &Poset) -> bool {
        let [a, b, c, d] = self.0;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && self.0.iter().all(|&v| (v as usize) < p.order())
            && p.less(a, b)
            && p.less(c, b)
            && p.less(c, d)
            && !p.comparable(a, c)
            && !p.comparable(a, d)
            && !p.comparable(b, d)
    }

    pub fn map(self, f: impl Fn(VertexId) -> VertexId) -> Self {
        NWitness(self.0.map(f))
    }
}

impl fmt::Display for NWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// `C⁻_x` and `C⁺_x`: elements below (above) `x` that are comparable to
/// every element of `inc(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CxSets {
    pub lower: VertexSet,
    pub upper: VertexSet,
}

impl CxSets {
    pub fn is_empty(&self) -> bool {
        self.lower.is_empty() && self.upper.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalChain {
    /// Ascending in the order.
    pub elements: Vec<VertexId>,
    pub top: VertexId,
    pub bottom: VertexId,
}

impl Poset {
    pub fn antichain(n: usize) -> Self {
        Poset {
            below: vec![Vec::new(); n],
            above: vec![Vec::new(); n],
        }
    }

    /// Reads each pair `(u, v)` as `u < v`.
    pub fn from_relations(n: usize, pairs: &[(VertexId, VertexId)], mode: RelationMode) -> Result<Self> {
        for &(u, v) in pairs {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::out_of_range(w, n));
                }
            }
            if u == v {
                return Err(Error::SelfRelation(u));
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(u, v) in pairs {
            succ[u as usize].push(v);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        let Some(topo) = topological_order(&succ) else {
            return Err(cycle_pair(&succ, pairs));
        };
        let above = closure(&succ, &topo);
        let p = Poset::from_above(above);
        if mode == RelationMode::Full {
            let given: HashSet<(VertexId, VertexId)> = pairs.iter().copied().collect();
            if given.len() != p.relation_count() {
                let (a, b) = p
                    .relations()
                    .find(|r| !given.contains(r))
                    .expect("closure strictly larger than input");
                return Err(Error::NotClosed(a, b));
            }
        }
        Ok(p)
    }

    /// Caller guarantees `above` is a sorted, transitively closed, acyclic
    /// relation.
    pub(crate) fn from_above(above: Vec<Vec<VertexId>>) -> Self {
        let mut below = vec![Vec::new(); above.len()];
        for (u, list) in above.iter().enumerate() {
            for &v in list {
                below[v as usize].push(u as VertexId);
            }
        }
        let p = Poset { below, above };
        debug_assert!(p.check_invariants());
        p
    }

    fn check_invariants(&self) -> bool {
        self.elements().all(|x| {
            let ups = self.above(x);
            ups.windows(2).all(|w| w[0] < w[1]) && !ups.contains(&x)
        })
    }

    /// Full structural check: sorted, irreflexive, transitive, and `below`
    /// mirrors `above`. Cubic; meant for tests and small inputs.
    pub fn is_well_formed(&self) -> bool {
        self.check_invariants()
            && self.elements().all(|x| {
                let ups = self.above(x);
                ups.iter().all(|&y| {
                    self.below(y).binary_search(&x).is_ok()
                        && self.above(y).iter().all(|z| ups.binary_search(z).is_ok())
                }) && self.below(x).iter().all(|&w| self.less(w, x))
            })
    }

    pub fn order(&self) -> usize {
        self.below.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = VertexId> {
        0..self.order() as VertexId
    }

    pub fn below(&self, x: VertexId) -> &[VertexId] {
        &self.below[x as usize]
    }

    pub fn above(&self, x: VertexId) -> &[VertexId] {
        &self.above[x as usize]
    }

    pub fn less(&self, a: VertexId, b: VertexId) -> bool {
        self.above[a as usize].binary_search(&b).is_ok()
    }

    pub fn comparable(&self, a: VertexId, b: VertexId) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    pub fn relation_count(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    /// All pairs `(a, b)` with `a < b`, lexicographically.
    pub fn relations(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a as VertexId, b)))
    }

    fn check(&self, x: VertexId) -> Result<()> {
        if (x as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::out_of_range(x, self.order()))
        }
    }

    /// Elements comparable to `x`, ascending.
    fn comparables(&self, x: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.below(x).len() + self.above(x).len());
        out.extend_from_slice(self.below(x));
        out.extend_from_slice(self.above(x));
        out.sort_unstable();
        out
    }

    pub fn comparability_graph(&self) -> Graph {
        Graph::from_sorted_adjacency(self.elements().map(|x| self.comparables(x)).collect())
    }

    pub fn incomparability_graph(&self) -> Graph {
        self.comparability_graph().complement()
    }

    pub fn is_connected(&self) -> bool {
        self.comparability_graph().is_connected()
    }

    /// Elements other than `x` that are incomparable to it.
    pub fn inc_set(&self, x: VertexId) -> Result<VertexSet> {
        self.check(x)?;
        let comp = self.comparables(x);
        Ok(VertexSet::from_sorted(
            self.elements()
                .filter(|&y| y != x && comp.binary_search(&y).is_err())
                .collect(),
        ))
    }

    /// Comparability graph restricted to `set`, relabelled by position.
    fn comparability_within(&self, set: &[VertexId]) -> Graph {
        let mut local = vec![VertexId::MAX; self.order()];
        for (i, &v) in set.iter().enumerate() {
            local[v as usize] = i as VertexId;
        }
        Graph::from_sorted_adjacency(
            set.iter()
                .map(|&v| {
                    self.comparables(v)
                        .into_iter()
                        .map(|u| local[u as usize])
                        .filter(|&u| u != VertexId::MAX)
                        .collect()
                })
                .collect(),
        )
    }

    /// Components of `inc(x)` under comparability.
    pub fn inc_components(&self, x: VertexId) -> Result<Partition> {
        let inc = self.inc_set(x)?;
        let g = self.comparability_within(inc.as_slice());
        Ok(Partition::from_blocks(
            components_by_label(&g)
                .into_iter()
                .map(|b| VertexSet::from_sorted(b.into_iter().map(|i| inc.as_slice()[i as usize]).collect()))
                .collect(),
        ))
    }

    /// True iff every element outside `a` is below all of `a`, above all of
    /// it, or incomparable to all of it.
    pub fn is_module(&self, a: &VertexSet) -> Result<bool> {
        if let Some(last) = a.as_slice().last() {
            self.check(*last)?;
        }
        if a.len() <= 1 || a.len() == self.order() {
            return Ok(true);
        }
        let mut in_a = vec![false; self.order()];
        for v in a.iter() {
            in_a[v as usize] = true;
        }
        let uniform = |list: &[VertexId]| {
            let k = list.iter().filter(|&&u| in_a[u as usize]).count();
            k == 0 || k == a.len()
        };
        Ok(self
            .elements()
            .filter(|&v| !in_a[v as usize])
            .all(|v| uniform(self.above(v)) && uniform(self.below(v))))
    }

    pub fn cx_sets(&self, x: VertexId) -> Result<CxSets> {
        let inc = self.inc_set(x)?;
        let mut in_inc = vec![false; self.order()];
        for v in inc.iter() {
            in_inc[v as usize] = true;
        }
        let sees_all = |y: VertexId| {
            let k = self
                .below(y)
                .iter()
                .chain(self.above(y))
                .filter(|&&u| in_inc[u as usize])
                .count();
            k == inc.len()
        };
        Ok(CxSets {
            lower: VertexSet::from_sorted(self.below(x).iter().copied().filter(|&y| sees_all(y)).collect()),
            upper: VertexSet::from_sorted(self.above(x).iter().copied().filter(|&y| sees_all(y)).collect()),
        })
    }

    /// Greedy maximal chain through `x`: repeatedly add the smallest-id
    /// element below `x` that is comparable to the whole chain, then the
    /// smallest-id such element above `x`, until neither exists.
    pub fn maximal_chain_through(&self, x: VertexId) -> Result<MaximalChain> {
        self.check(x)?;
        let mut chain = vec![x];
        let mut candidates = self.comparables(x);
        while !candidates.is_empty() {
            let y = candidates
                .iter()
                .copied()
                .find(|&y| self.less(y, x))
                .unwrap_or(candidates[0]);
            chain.push(y);
            candidates.retain(|&z| z != y && self.comparable(y, z));
        }
        chain.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.less(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(MaximalChain {
            bottom: chain[0],
            top: *chain.last().expect("chain contains x"),
            elements: chain,
        })
    }

    /// The suborder on `a`, relabelled to `0..|a|` ascending, with the map
    /// back to ids of `self`.
    pub fn induced(&self, a: &VertexSet) -> Result<(Poset, Vec<VertexId>)> {
        if let Some(last) = a.as_slice().last() {
            self.check(*last)?;
        }
        let mut local = vec![VertexId::MAX; self.order()];
        for (i, v) in a.iter().enumerate() {
            local[v as usize] = i as VertexId;
        }
        let above = a
            .iter()
            .map(|v| {
                self.above(v)
                    .iter()
                    .map(|&u| local[u as usize])
                    .filter(|&u| u != VertexId::MAX)
                    .collect()
            })
            .collect();
        Ok((Poset::from_above(above), a.as_slice().to_vec()))
    }
}

/// Kahn's algorithm; `None` when the relation has a cycle.
fn topological_order(succ: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    let mut indegree = vec![0usize; succ.len()];
    for list in succ {
        for &v in list {
            indegree[v as usize] += 1;
        }
    }
    let mut ready: Vec<VertexId> = (0..succ.len() as VertexId)
        .filter(|&v| indegree[v as usize] == 0)
        .collect();
    let mut order = Vec::with_capacity(succ.len());
    while let Some(u) = ready.pop() {
        order.push(u);
        for &v in &succ[u as usize] {
            indegree[v as usize] -= 1;
            if indegree[v as usize] == 0 {
                ready.push(v);
            }
        }
    }
    (order.len() == succ.len()).then_some(order)
}

/// First input pair `(u, v)` such that `u` is reachable from `v`.
fn cycle_pair(succ: &[Vec<VertexId>], pairs: &[(VertexId, VertexId)]) -> Error {
    for &(u, v) in pairs {
        let mut seen = vec![false; succ.len()];
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            if w == u {
                return Error::Cycle(u, v);
            }
            for &s in &succ[w as usize] {
                if !std::mem::replace(&mut seen[s as usize], true) {
                    stack.push(s);
                }
            }
        }
    }
    unreachable!("topological sort failed, so some pair lies on a cycle")
}

/// Transitive closure over bitset rows, sinks first. Successors are merged
/// in topological order so that any successor already reached through an
/// earlier one is skipped; on an already-closed input only the covers cost
/// a row union.
fn closure(succ: &[Vec<VertexId>], topo: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = succ.len();
    let words = n.div_ceil(64);
    let mut rank = vec![0usize; n];
    for (i, &v) in topo.iter().enumerate() {
        rank[v as usize] = i;
    }
    let mut rows = vec![0u64; n * words];
    let mut order = Vec::new();
    for &u in topo.iter().rev() {
        order.clear();
        order.extend_from_slice(&succ[u as usize]);
        order.sort_unstable_by_key(|&v| rank[v as usize]);
        let (head, tail) = rows.split_at_mut(u as usize * words);
        let (row, tail) = tail.split_at_mut(words);
        for &v in &order {
            let bit = 1u64 << (v % 64);
            if row[v as usize / 64] & bit != 0 {
                continue;
            }
            row[v as usize / 64] |= bit;
            // Rows are indexed by id, so `v`'s row may sit on either side.
            let other = if (v as usize) < u as usize {
                &head[v as usize * words..(v as usize + 1) * words]
            } else {
                let start = (v as usize - u as usize - 1) * words;
                &tail[start..start + words]
            };
            for (dst, src) in row.iter_mut().zip(other) {
                *dst |= *src;
            }
        }
    }
    (0..n)
        .map(|u| {
            let row = &rows[u * words..(u + 1) * words];
            let mut out = Vec::new();
            for (w, &bits) in row.iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    out.push((w * 64 + bits.trailing_zeros() as usize) as VertexId);
                    bits &= bits - 1;
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn covers(n: usize, pairs: &[(VertexId, VertexId)]) -> Poset {
        Poset::from_relations(n, pairs, RelationMode::Covers).unwrap()
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
        covers(n, &pairs)
    }

    /// a=0, b=1, c=2, d=3 with 0<1, 2<1, 2<3.
    pub fn n_poset() -> Poset {
        covers(4, &[(0, 1), (2, 1), (2, 3)])
    }

    /// Bottom 0, incomparable middle 1 and 2, top 3.
    pub fn diamond() -> Poset {
        covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }
}
