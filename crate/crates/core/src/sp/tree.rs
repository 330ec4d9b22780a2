use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::lex_scan_n;
use crate::cograph::{p4_by_neighborhoods, Cotree};
use crate::decompose::{decompose, Join};
use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};
use crate::poset::{NWitness, Poset};

const LEX_SCAN_LIMIT: usize = 24;

/// Linear / disjoint sum decomposition tree of a series-parallel poset.
///
/// Canonical form: inner nodes have at least two children, kinds alternate,
/// disjoint children are ordered by smallest leaf, and linear children are
/// listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpTree {
    Leaf { element: VertexId },
    Linear { children: Vec<SpTree> },
    Disjoint { children: Vec<SpTree> },
}

impl SpTree {
    pub fn leaf(element: VertexId) -> Self {
        SpTree::Leaf { element }
    }

    pub fn linear(children: Vec<SpTree>) -> Self {
        SpTree::Linear { children }
    }

    pub fn disjoint(children: Vec<SpTree>) -> Self {
        SpTree::Disjoint { children }
    }

    pub fn children(&self) -> &[SpTree] {
        match self {
            SpTree::Leaf { .. } => &[],
            SpTree::Linear { children } | SpTree::Disjoint { children } => children,
        }
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                SpTree::Leaf { element } => out.push(*element),
                _ => stack.extend(t.children().iter().rev()),
            }
        }
        out
    }

    pub fn min_leaf(&self) -> VertexId {
        match self {
            SpTree::Leaf { element } => *element,
            _ => self
                .children()
                .iter()
                .map(SpTree::min_leaf)
                .min()
                .expect("inner node has children"),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(SpTree::node_count).sum::<usize>()
    }

    pub fn is_canonical(&self) -> bool {
        fn walk(t: &SpTree, parent_linear: Option<bool>) -> bool {
            let linear = match t {
                SpTree::Leaf { .. } => return true,
                SpTree::Linear { .. } => true,
                SpTree::Disjoint { .. } => false,
            };
            let kids = t.children();
            kids.len() >= 2
                && parent_linear != Some(linear)
                && (linear || kids.windows(2).all(|w| w[0].min_leaf() < w[1].min_leaf()))
                && kids.iter().all(|c| walk(c, Some(linear)))
        }
        walk(self, None) && crate::cograph::check_leaves(&self.leaves()).is_ok()
    }

    pub fn map_leaves(&self, f: &impl Fn(VertexId) -> VertexId) -> SpTree {
        match self {
            SpTree::Leaf { element } => SpTree::leaf(f(*element)),
            SpTree::Linear { children } => SpTree::linear(children.iter().map(|c| c.map_leaves(f)).collect()),
            SpTree::Disjoint { children } => SpTree::disjoint(children.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    /// Graphviz rendering: linear nodes `→`, disjoint nodes `∪`, leaves by
    /// element id.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph sptree {\n");
        let mut next = 0usize;
        let mut stack = vec![(self, None::<usize>)];
        while let Some((t, parent)) = stack.pop() {
            let id = next;
            next += 1;
            let label = match t {
                SpTree::Leaf { element } => element.to_string(),
                SpTree::Linear { .. } => "→".to_string(),
                SpTree::Disjoint { .. } => "∪".to_string(),
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

impl From<&Cotree> for SpTree {
    /// Series becomes linear in child order, parallel becomes disjoint.
    fn from(t: &Cotree) -> Self {
        match t {
            Cotree::Leaf { vertex } => SpTree::leaf(*vertex),
            Cotree::Series { children } => SpTree::linear(children.iter().map(SpTree::from).collect()),
            Cotree::Parallel { children } => SpTree::disjoint(children.iter().map(SpTree::from).collect()),
        }
    }
}

/// Decomposes `p` by splitting its comparability graph: components give
/// disjoint sums, complement components give linear sums whose blocks are
/// ordered by comparing one representative from each. When a part is both
/// connected and co-connected, an N inside it is returned.
pub fn sp_tree(p: &Poset) -> Result<SpTree> {
    if p.order() == 0 {
        return Err(Error::Empty);
    }
    let g = p.comparability_graph();
    match decompose(&g) {
        Ok(d) => Ok(d.fold(SpTree::leaf, |join, mut parts| match join {
            Join::Parallel => SpTree::disjoint(parts.into_iter().map(|(t, _)| t).collect()),
            Join::Series => {
                parts.sort_by(|(_, a), (_, b)| {
                    if p.less(*a, *b) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                });
                SpTree::linear(parts.into_iter().map(|(t, _)| t).collect())
            }
        })),
        Err(failing) => {
            drop(g);
            let (sub, labels) = p.induced(&VertexSet::from_sorted(failing))?;
            let local = if sub.order() <= LEX_SCAN_LIMIT {
                lex_scan_n(&sub)
            } else {
                p4_by_neighborhoods(&sub.comparability_graph())
                    .map(|w| orient_p4(&sub, w.0))
                    .or_else(|| lex_scan_n(&sub))
            };
            let w = local.expect("connected, co-connected posets contain an N");
            Err(Error::ContainsN(w.map(|v| labels[v as usize])))
        }
    }
}

/// An induced P4 `a-b-c-d` of the comparability graph is an N: `b` is
/// either above both `a` and `c` (then `c < d`) or below both (then read
/// the path backwards).
fn orient_p4(p: &Poset, [a, b, c, d]: [VertexId; 4]) -> NWitness {
    if p.less(a, b) {
        NWitness([a, b, c, d])
    } else {
        NWitness([d, c, b, a])
    }
}

/// Lexicographic sum along the tree: every leaf of an earlier linear child
/// is below every leaf of a later one.
pub fn sp_tree_to_poset(t: &SpTree) -> Result<Poset> {
    let leaves = t.leaves();
    crate::cograph::check_leaves(&leaves)?;
    let mut above: Vec<Vec<VertexId>> = vec![Vec::new(); leaves.len()];
    stack_children(t, &mut above)?;
    for list in &mut above {
        list.sort_unstable();
    }
    Ok(Poset::from_above(above))
}

fn stack_children(t: &SpTree, above: &mut [Vec<VertexId>]) -> Result<Vec<VertexId>> {
    match t {
        SpTree::Leaf { element } => Ok(vec![*element]),
        SpTree::Linear { children } | SpTree::Disjoint { children } => {
            if children.len() < 2 {
                return Err(Error::MalformedTree("inner node with fewer than two children"));
            }
            let groups = children
                .iter()
                .map(|c| stack_children(c, above))
                .collect::<Result<Vec<_>>>()?;
            if matches!(t, SpTree::Linear { .. }) {
                for (i, group) in groups.iter().enumerate() {
                    for later in &groups[i + 1..] {
                        for &v in group {
                            above[v as usize].extend_from_slice(later);
                        }
                    }
                }
            }
            Ok(groups.concat())
        }
    }
}

/// Orients a cotree into an N-free poset with that comparability graph:
/// parallel nodes become disjoint sums and series nodes linear sums in
/// canonical child order.
pub fn orient_cotree(t: &Cotree) -> Result<Poset> {
    sp_tree_to_poset(&SpTree::from(t))
}
