//! Recognition and structure of P4-free graphs.
//!
//! Besides cotree construction this module exposes the neighborhood
//! machinery behind the decomposition of connected P4-free graphs: the
//! components of `inc(x)` are modules, each of them cuts `N(x)` into a part
//! joined to it and a part anticomplete to it, and a vertex of `N_x` exists
//! exactly when the complement is disconnected. Every routine that relies
//! on P4-freeness without checking it reports the induced P4 it stumbles on
//! instead of returning a wrong answer.

mod cotree;

use std::fmt;

use serde::{Deserialize, Serialize};

pub(crate) use cotree::check_leaves;
pub use cotree::{cotree, cotree_to_graph, is_cograph, Cotree};

use crate::error::{Error, Result};
use crate::graph::{components_by_label, Graph, Partition, VertexId, VertexSet};

/// An induced path `a - b - c - d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct P4Witness(pub [VertexId; 4]);

impl P4Witness {
    /// Checks the exact edge pattern: `ab`, `bc`, `cd` present and `ac`,
    /// `ad`, `bd` absent, on four distinct vertices of `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.0;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && self.0.iter().all(|&v| (v as usize) < g.order())
            && g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, d)
    }

    pub fn map(self, f: impl Fn(VertexId) -> VertexId) -> Self {
        P4Witness(self.0.map(f))
    }
}

impl fmt::Display for P4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// A vertex `x` with nonempty `N_x`, and the resulting split of the vertex
/// set into `X \ N_x` (containing `x`) and `N_x`, every pair across which is
/// an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Witness {
    pub x: VertexId,
    pub universal_neighbors: VertexSet,
    pub co_split: [VertexSet; 2],
}

impl Theorem2Witness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let nx = &self.universal_neighbors;
        let [rest, joined] = &self.co_split;
        (self.x as usize) < g.order()
            && !nx.is_empty()
            && joined == nx
            && rest.contains(self.x)
            && rest.len() + joined.len() == g.order()
            && nx.iter().all(|y| g.has_edge(self.x, y))
            && rest
                .iter()
                .all(|u| !joined.contains(u) && nx.iter().all(|y| g.has_edge(u, y)))
    }
}

/// The split of `N(x)` induced by one component of `inc(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Partition {
    pub component: VertexSet,
    /// Neighbors of `x` adjacent to the whole component.
    pub n1: VertexSet,
    /// Neighbors of `x` adjacent to none of it.
    pub n2: VertexSet,
}

impl Lemma2Partition {
    pub fn is_valid(&self, g: &Graph, x: VertexId) -> bool {
        let Ok(nbrs) = g.neighbors(x) else {
            return false;
        };
        let union: VertexSet = self.n1.iter().chain(self.n2.iter()).collect();
        union == nbrs
            && union.len() == self.n1.len() + self.n2.len()
            && self.n1.iter().all(|y| self.component.iter().all(|c| g.has_edge(y, c)))
            && self.n2.iter().all(|y| self.component.iter().all(|c| !g.has_edge(y, c)))
            && self.n1.iter().all(|a| self.n2.iter().all(|b| g.has_edge(a, b)))
    }
}

/// Connected components of the subgraph induced on `inc(x)`.
pub fn inc_components(g: &Graph, x: VertexId) -> Result<Partition> {
    let inc = g.inc_set(x)?;
    let (sub, labels) = g.induced(&inc)?;
    Ok(Partition::from_blocks(
        components_by_label(&sub)
            .into_iter()
            .map(|block| VertexSet::from_sorted(block.into_iter().map(|v| labels[v as usize]).collect()))
            .collect(),
    ))
}

/// Splits `N(x)` by a component `c` of `inc(x)`.
///
/// Fails with an induced P4 when some neighbor of `x` sees only part of `c`,
/// or when a vertex joined to `c` misses a vertex anticomplete to it.
pub fn lemma2_partition(g: &Graph, x: VertexId, c: &VertexSet) -> Result<Lemma2Partition> {
    let comps = inc_components(g, x)?;
    if !comps.blocks().contains(c) {
        return Err(Error::NotIncComponent(x));
    }
    lemma2_unchecked(g, x, c)
}

fn lemma2_unchecked(g: &Graph, x: VertexId, c: &VertexSet) -> Result<Lemma2Partition> {
    let mut hits = vec![0usize; g.order()];
    for v in c.iter() {
        for &u in g.adj(v) {
            hits[u as usize] += 1;
        }
    }
    let mut n1 = Vec::new();
    let mut n2 = Vec::new();
    for &y in g.adj(x) {
        match hits[y as usize] {
            0 => n2.push(y),
            h if h == c.len() => n1.push(y),
            _ => return Err(Error::ContainsP4(split_edge(g, x, y, c))),
        }
    }
    if let Some(w) = missing_join(g, &n1, &n2) {
        let (y1, y2) = w;
        let c0 = c.first().expect("components are nonempty");
        return Err(Error::ContainsP4(P4Witness([c0, y1, x, y2])));
    }
    Ok(Lemma2Partition {
        component: c.clone(),
        n1: VertexSet::from_sorted(n1),
        n2: VertexSet::from_sorted(n2),
    })
}

/// `y` sees part of the connected set `c`: some edge `ab` of `c` has `a`
/// adjacent to `y` and `b` not, giving the path `x - y - a - b`.
fn split_edge(g: &Graph, x: VertexId, y: VertexId, c: &VertexSet) -> P4Witness {
    for a in c.iter().filter(|&a| g.has_edge(y, a)) {
        for &b in g.adj(a) {
            if c.contains(b) && !g.has_edge(y, b) {
                return P4Witness([x, y, a, b]);
            }
        }
    }
    unreachable!("component {c} is connected and {y} sees part of it")
}

/// First pair `(a, b)` with `a` in `left`, `b` in `right` and no edge `ab`.
fn missing_join(g: &Graph, left: &[VertexId], right: &[VertexId]) -> Option<(VertexId, VertexId)> {
    if right.is_empty() {
        return None;
    }
    let mut in_right = vec![false; g.order()];
    for &b in right {
        in_right[b as usize] = true;
    }
    for &a in left {
        let seen = g.adj(a).iter().filter(|&&u| in_right[u as usize]).count();
        if seen < right.len() {
            let b = right.iter().copied().find(|&b| !g.has_edge(a, b)).expect("short count");
            return Some((a, b));
        }
    }
    None
}

/// Searches vertices in ascending order for the first `x` with nonempty
/// `N_x` and returns the split it induces.
///
/// `None` on a connected input means no vertex has a nonempty `N_x`; for a
/// finite graph that certifies a connected complement, so the input is not
/// a cograph and contains an induced P4. P4-freeness is not verified, but
/// if the split of a found `x` is not a join the offending P4 is returned.
pub fn theorem2_witness(g: &Graph) -> Result<Option<Theorem2Witness>> {
    if g.order() == 0 {
        return Err(Error::Empty);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for x in g.vertices() {
        let nx = g.n_x(x)?;
        if nx.is_empty() {
            continue;
        }
        let outside: Vec<VertexId> = g.adj(x).iter().copied().filter(|&y| !nx.contains(y)).collect();
        if let Some((y1, y2)) = missing_join(g, nx.as_slice(), &outside) {
            let c = first_non_neighbor_in_inc(g, x, y2);
            return Err(Error::ContainsP4(P4Witness([y2, x, y1, c])));
        }
        let rest = g.vertices().filter(|&v| !nx.contains(v)).collect();
        return Ok(Some(Theorem2Witness {
            x,
            co_split: [VertexSet::from_sorted(rest), nx.clone()],
            universal_neighbors: nx,
        }));
    }
    Ok(None)
}

fn first_non_neighbor_in_inc(g: &Graph, x: VertexId, y: VertexId) -> VertexId {
    g.non_neighbors(x)
        .into_iter()
        .find(|&c| !g.has_edge(y, c))
        .expect("vertex outside N_x misses part of inc(x)")
}

/// Picks a neighbor of `x` that is adjacent to all of `inc(x)`, by choosing
/// the component of `inc(x)` whose joined part of `N(x)` is smallest
/// (cardinality, then lexicographic) and returning that part's smallest
/// member. With `inc(x)` empty, returns the smallest neighbor.
pub fn corollary1_select(g: &Graph, x: VertexId) -> Result<VertexId> {
    g.check_vertex(x)?;
    if g.degree(x) == 0 {
        return Err(Error::Isolated(x));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let comps = inc_components(g, x)?;
    let mut best: Option<VertexSet> = None;
    for c in comps.blocks() {
        let n1 = lemma2_unchecked(g, x, c)?.n1;
        let smaller = match &best {
            None => true,
            Some(b) => (n1.len(), &n1) < (b.len(), b),
        };
        if smaller {
            best = Some(n1);
        }
    }
    match best {
        None => Ok(g.adj(x)[0]),
        Some(n1) => n1.first().ok_or(Error::Disconnected),
    }
}

/// Extracts an induced P4 from a connected, co-connected graph by running
/// the neighborhood arguments around vertex 0 until one of them breaks.
/// Each step is linear in the size of the graph.
pub(crate) fn p4_by_neighborhoods(g: &Graph) -> Option<P4Witness> {
    let x = 0;
    let n = g.order();
    let inc = g.non_neighbors(x);
    if inc.is_empty() || g.degree(x) == 0 {
        return None;
    }
    let (sub, labels) = g.induced(&VertexSet::from_sorted(inc.clone())).ok()?;
    let comps: Vec<Vec<VertexId>> = components_by_label(&sub)
        .into_iter()
        .map(|b| b.into_iter().map(|v| labels[v as usize]).collect())
        .collect();
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v as usize] = i;
        }
    }

    // Every component is a module and splits N(x) cleanly.
    let mut in_nbr = vec![false; n];
    for &y in g.adj(x) {
        in_nbr[y as usize] = true;
    }
    let mut hits = vec![0usize; n];
    let mut joined: Vec<Vec<VertexId>> = Vec::with_capacity(comps.len());
    for c in &comps {
        let mut touched = Vec::new();
        for &v in c {
            for &u in g.adj(v) {
                if in_nbr[u as usize] {
                    if hits[u as usize] == 0 {
                        touched.push(u);
                    }
                    hits[u as usize] += 1;
                }
            }
        }
        touched.sort_unstable();
        let mut n1 = Vec::new();
        for &y in &touched {
            if hits[y as usize] < c.len() {
                let set = VertexSet::from_sorted(c.clone());
                return Some(split_edge(g, x, y, &set));
            }
            n1.push(y);
        }
        for &y in &touched {
            hits[y as usize] = 0;
        }
        joined.push(n1);
    }

    let best = (0..comps.len()).min_by(|&a, &b| (joined[a].len(), &joined[a]).cmp(&(joined[b].len(), &joined[b])))?;
    let n1 = &joined[best];
    let c0 = comps[best][0];
    if n1.is_empty() {
        return None;
    }
    let n2: Vec<VertexId> = g
        .adj(x)
        .iter()
        .copied()
        .filter(|y| n1.binary_search(y).is_err())
        .collect();
    if let Some((y1, y2)) = missing_join(g, n1, &n2) {
        return Some(P4Witness([c0, y1, x, y2]));
    }

    // The minimal joined part must see all of inc(x).
    if let Some((y1, c1)) = missing_join(g, n1, &inc) {
        let other = &joined[comp_of[c1 as usize]];
        let y2 = other.iter().copied().find(|y| n1.binary_search(y).is_err())?;
        return Some(P4Witness([c1, y2, y1, c0]));
    }

    // N_x is then nonempty and must be joined to everything else.
    let nx: Vec<VertexId> = g
        .adj(x)
        .iter()
        .copied()
        .filter(|&y| missing_join(g, &[y], &inc).is_none())
        .collect();
    let outside: Vec<VertexId> = g
        .adj(x)
        .iter()
        .copied()
        .filter(|y| nx.binary_search(y).is_err())
        .collect();
    let (y1, y2) = missing_join(g, &nx, &outside)?;
    let c = inc.iter().copied().find(|&c| !g.has_edge(y2, c))?;
    Some(P4Witness([y2, x, y1, c]))
}

/// Finite window of the integer graph in which `i < j` are adjacent exactly
/// when `i` is even. Vertex `v` stands for the integer `offset + v`.
pub fn gen_h_window(n: usize, offset: i64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        if (offset + i as i64).rem_euclid(2) == 0 {
            for j in i + 1..n {
                adj[i].push(j as VertexId);
                adj[j].push(i as VertexId);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// `gen_h_window(n, 0)`: the integers `0..n`.
pub fn gen_h(n: usize) -> Result<Graph> {
    gen_h_window(n, 0)
}
