use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{p4_by_neighborhoods, P4Witness};
use crate::decompose::{decompose, Join};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Failing sets up to this size are searched exhaustively so the reported
/// P4 is the lexicographically first one; larger sets go through the
/// linear-time neighborhood extraction.
const LEX_SCAN_LIMIT: usize = 24;

/// Series (join) / parallel (disjoint union) decomposition tree.
///
/// Canonical form: inner nodes have at least two children, kinds alternate
/// along every root-leaf path, and children are ordered by their smallest
/// leaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cotree {
    Leaf { vertex: VertexId },
    Series { children: Vec<Cotree> },
    Parallel { children: Vec<Cotree> },
}

impl Cotree {
    pub fn leaf(vertex: VertexId) -> Self {
        Cotree::Leaf { vertex }
    }

    pub fn series(children: Vec<Cotree>) -> Self {
        Cotree::Series { children }
    }

    pub fn parallel(children: Vec<Cotree>) -> Self {
        Cotree::Parallel { children }
    }

    pub fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf { .. } => &[],
            Cotree::Series { children } | Cotree::Parallel { children } => children,
        }
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Cotree::Leaf { vertex } => out.push(*vertex),
                _ => stack.extend(t.children().iter().rev()),
            }
        }
        out
    }

    pub fn min_leaf(&self) -> VertexId {
        match self {
            Cotree::Leaf { vertex } => *vertex,
            _ => self
                .children()
                .iter()
                .map(Cotree::min_leaf)
                .min()
                .expect("inner node has children"),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(Cotree::node_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(Cotree::depth).max().unwrap_or(0)
    }

    /// True when the tree satisfies every canonical-form invariant and its
    /// leaves are exactly `0..n`.
    pub fn is_canonical(&self) -> bool {
        fn walk(t: &Cotree, parent_series: Option<bool>) -> bool {
            let series = match t {
                Cotree::Leaf { .. } => return true,
                Cotree::Series { .. } => true,
                Cotree::Parallel { .. } => false,
            };
            let kids = t.children();
            kids.len() >= 2
                && parent_series != Some(series)
                && kids.windows(2).all(|w| w[0].min_leaf() < w[1].min_leaf())
                && kids.iter().all(|c| walk(c, Some(series)))
        }
        walk(self, None) && check_leaves(&self.leaves()).is_ok()
    }

    pub fn map_leaves(&self, f: &impl Fn(VertexId) -> VertexId) -> Cotree {
        match self {
            Cotree::Leaf { vertex } => Cotree::leaf(f(*vertex)),
            Cotree::Series { children } => Cotree::series(children.iter().map(|c| c.map_leaves(f)).collect()),
            Cotree::Parallel { children } => Cotree::parallel(children.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    /// Graphviz rendering: series nodes are labelled `×`, parallel nodes
    /// `∪`, leaves by vertex id.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cotree {\n");
        let mut next = 0usize;
        let mut stack = vec![(self, None::<usize>)];
        while let Some((t, parent)) = stack.pop() {
            let id = next;
            next += 1;
            let label = match t {
                Cotree::Leaf { vertex } => vertex.to_string(),
                Cotree::Series { .. } => "×".to_string(),
                Cotree::Parallel { .. } => "∪".to_string(),
            };
            writeln!(out, "  n{id} [label=\"{label}\"];").unwrap();
            if let Some(p) = parent {
                writeln!(out, "  n{p} -- n{id};").unwrap();
            }
            stack.extend(t.children().iter().rev().map(|c| (c, Some(id))));
        }
        out.push_str("}\n");
        out
    }
}

/// Leaves must be distinct and cover `0..len`.
pub(crate) fn check_leaves(leaves: &[VertexId]) -> Result<()> {
    let n = leaves.len();
    let mut seen = vec![false; n];
    for &v in leaves {
        if (v as usize) >= n {
            // Some smaller id must be missing.
            let missing = (0..n).find(|&i| !leaves.contains(&(i as VertexId))).unwrap_or(n);
            return Err(Error::MissingLeaf {
                missing: missing as VertexId,
                order: n,
            });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::DuplicateLeaf(v));
        }
    }
    Ok(())
}

/// Builds the cotree of `g`, or returns the induced P4 that prevents one.
pub fn cotree(g: &Graph) -> Result<Cotree> {
    if g.order() == 0 {
        return Err(Error::Empty);
    }
    match decompose(g) {
        Ok(d) => Ok(d.fold(Cotree::leaf, |join, parts| {
            let children = parts.into_iter().map(|(t, _)| t).collect();
            match join {
                Join::Series => Cotree::series(children),
                Join::Parallel => Cotree::parallel(children),
            }
        })),
        Err(failing) => {
            let (sub, labels) = g.induced(&VertexSet::from_sorted(failing))?;
            let local = if sub.order() <= LEX_SCAN_LIMIT {
                lex_scan_p4(&sub)
            } else {
                p4_by_neighborhoods(&sub).or_else(|| lex_scan_p4(&sub))
            };
            let w = local.expect("connected, co-connected graphs contain an induced P4");
            Err(Error::ContainsP4(w.map(|v| labels[v as usize])))
        }
    }
}

/// The empty graph counts as a cograph.
pub fn is_cograph(g: &Graph) -> bool {
    g.order() == 0 || cotree(g).is_ok()
}

/// Two leaves are adjacent exactly when their lowest common ancestor is a
/// series node.
pub fn cotree_to_graph(t: &Cotree) -> Result<Graph> {
    let leaves = t.leaves();
    check_leaves(&leaves)?;
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); leaves.len()];
    join_children(t, &mut adj)?;
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

fn join_children(t: &Cotree, adj: &mut [Vec<VertexId>]) -> Result<Vec<VertexId>> {
    match t {
        Cotree::Leaf { vertex } => Ok(vec![*vertex]),
        Cotree::Series { children } | Cotree::Parallel { children } => {
            if children.len() < 2 {
                return Err(Error::MalformedTree("inner node with fewer than two children"));
            }
            let groups = children
                .iter()
                .map(|c| join_children(c, adj))
                .collect::<Result<Vec<_>>>()?;
            if matches!(t, Cotree::Series { .. }) {
                for (i, group) in groups.iter().enumerate() {
                    for (j, other) in groups.iter().enumerate() {
                        if i != j {
                            for &v in group {
                                adj[v as usize].extend_from_slice(other);
                            }
                        }
                    }
                }
            }
            Ok(groups.concat())
        }
    }
}

/// Lexicographically first induced P4: 4-subsets in ascending order, then
/// the twelve path orderings of each subset in permutation order.
pub(crate) fn lex_scan_p4(g: &Graph) -> Option<P4Witness> {
    let n = g.order() as VertexId;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    for perm in PATH_ORDERS {
                        let w = P4Witness(perm.map(|i| quad[i]));
                        if w.is_valid(g) {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Permutations of four positions in lexicographic order, keeping one of
/// each path/reversal pair (first position below last).
const PATH_ORDERS: [[usize; 4]; 12] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 3, 0, 2],
    [2, 0, 1, 3],
    [2, 1, 0, 3],
];
