//! Finite simple undirected graphs over dense vertex ids.
//!
//! Adjacency is stored as one sorted `Vec` per vertex, so neighborhoods,
//! `inc(x)` and `N_x` come out in ascending order and every witness built on
//! top of them is reproducible.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex (or poset element) index in `0..order`.
pub type VertexId = u32;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Caller guarantees `members` is strictly increasing.
    pub(crate) fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut members: Vec<VertexId> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(members: [VertexId; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Disjoint nonempty blocks, listed by ascending smallest member.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub(crate) fn from_blocks(mut blocks: Vec<VertexSet>) -> Self {
        debug_assert!(blocks.iter().all(|b| !b.is_empty()));
        blocks.sort_by_key(|b| b.first());
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.blocks
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= order {
                    return Err(Error::out_of_range(w, order));
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut count = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u as VertexId, w[0]);
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            count += list.len();
        }
        Ok(Graph { adj, edges: count / 2 })
    }

    /// Caller guarantees symmetric, loop-free, sorted adjacency.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, edges };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(x, list)| {
            list.windows(2).all(|w| w[0] < w[1]) && list.iter().all(|&y| (y as usize) < self.order() && y as usize != x)
        })
    }

    /// Sorted, loop-free, in range and symmetric.
    pub fn is_well_formed(&self) -> bool {
        self.check_invariants()
            && self.adj.iter().enumerate().all(|(x, list)| {
                list.iter()
                    .all(|&y| self.adj[y as usize].binary_search(&(x as VertexId)).is_ok())
            })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub(crate) fn adj(&self, x: VertexId) -> &[VertexId] {
        &self.adj[x as usize]
    }

    pub fn degree(&self, x: VertexId) -> usize {
        self.adj[x as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.adj[u as usize].len() <= self.adj[v as usize].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.order() as VertexId
    }

    pub(crate) fn check_vertex(&self, x: VertexId) -> Result<()> {
        if (x as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::out_of_range(x, self.order()))
        }
    }

    fn check_set(&self, a: &VertexSet) -> Result<()> {
        match a.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// `N(x)`: the vertices adjacent to `x`.
    pub fn neighbors(&self, x: VertexId) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet::from_sorted(self.adj(x).to_vec()))
    }

    /// `inc(x)`: every vertex other than `x` that is not adjacent to it.
    pub fn inc_set(&self, x: VertexId) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet::from_sorted(self.non_neighbors(x)))
    }

    pub(crate) fn non_neighbors(&self, x: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.order() - 1 - self.degree(x));
        let mut nbrs = self.adj(x).iter().peekable();
        for v in self.vertices() {
            if nbrs.peek() == Some(&&v) {
                nbrs.next();
            } else if v != x {
                out.push(v);
            }
        }
        out
    }

    /// `N_x`: the neighbors of `x` adjacent to every member of `inc(x)`.
    pub fn n_x(&self, x: VertexId) -> Result<VertexSet> {
        self.check_vertex(x)?;
        let inc = self.non_neighbors(x);
        let mut in_inc = vec![false; self.order()];
        for &c in &inc {
            in_inc[c as usize] = true;
        }
        let members = self
            .adj(x)
            .iter()
            .copied()
            .filter(|&y| self.adj(y).iter().filter(|&&c| in_inc[c as usize]).count() == inc.len())
            .collect();
        Ok(VertexSet::from_sorted(members))
    }

    pub fn components(&self) -> Partition {
        Partition::from_blocks(
            components_by_label(self)
                .into_iter()
                .map(VertexSet::from_sorted)
                .collect(),
        )
    }

    /// Connected components of the complement, found without building it.
    pub fn co_components(&self) -> Partition {
        Partition::from_blocks(
            co_components_by_label(self)
                .into_iter()
                .map(VertexSet::from_sorted)
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || components_by_label(self).len() == 1
    }

    /// The subgraph induced on `a`, relabelled to `0..|a|` in ascending
    /// order. The second value maps each new id back to its id in `self`.
    pub fn induced(&self, a: &VertexSet) -> Result<(Graph, Vec<VertexId>)> {
        self.check_set(a)?;
        let mut local = vec![VertexId::MAX; self.order()];
        for (i, v) in a.iter().enumerate() {
            local[v as usize] = i as VertexId;
        }
        let adj = a
            .iter()
            .map(|v| {
                self.adj(v)
                    .iter()
                    .map(|&u| local[u as usize])
                    .filter(|&u| u != VertexId::MAX)
                    .collect()
            })
            .collect();
        Ok((Graph::from_sorted_adjacency(adj), a.as_slice().to_vec()))
    }

    /// True iff every vertex outside `a` sees either all of `a` or none of it.
    pub fn is_module(&self, a: &VertexSet) -> Result<bool> {
        self.check_set(a)?;
        if a.len() <= 1 || a.len() == self.order() {
            return Ok(true);
        }
        let mut hits = vec![0usize; self.order()];
        for v in a.iter() {
            for &u in self.adj(v) {
                hits[u as usize] += 1;
            }
        }
        Ok(self
            .vertices()
            .filter(|&v| !a.contains(v))
            .all(|v| hits[v as usize] == 0 || hits[v as usize] == a.len()))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_sorted_adjacency(self.vertices().map(|x| self.non_neighbors(x)).collect())
    }
}

/// Components as ascending vertex lists, ordered by smallest member.
pub(crate) fn components_by_label(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.order()];
    let mut blocks = Vec::new();
    let mut stack = Vec::new();
    for start in g.vertices() {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        stack.push(start);
        let mut block = Vec::new();
        while let Some(v) = stack.pop() {
            block.push(v);
            for &u in g.adj(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    stack.push(u);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

/// Complement BFS: keep the unvisited vertices in an ascending list and, for
/// each dequeued vertex, move every unvisited non-neighbor into the current
/// block. Survivors of a scan are neighbors of the dequeued vertex, so the
/// total work is `O(n + m)`.
pub(crate) fn co_components_by_label(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.order();
    let mut unvisited: VecDeque<VertexId> = g.vertices().collect();
    let mut stamp = vec![VertexId::MAX; n];
    let mut blocks = Vec::new();
    let mut queue = Vec::new();
    while let Some(start) = unvisited.pop_front() {
        let mut block = vec![start];
        queue.push(start);
        while let Some(v) = queue.pop() {
            for &u in g.adj(v) {
                stamp[u as usize] = v;
            }
            unvisited.retain(|&u| {
                if stamp[u as usize] == v {
                    true
                } else {
                    block.push(u);
                    queue.push(u);
                    false
                }
            });
            if unvisited.is_empty() {
                break;
            }
        }
        queue.clear();
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}
