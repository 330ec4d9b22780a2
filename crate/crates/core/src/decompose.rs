//! Series/parallel splitting of an undirected graph.
//!
//! A vertex set is split by connected components when the induced subgraph
//! is disconnected, by complement components when it is co-disconnected,
//! and is reported as a failure when it is neither. Cotrees use this on the
//! graph itself, SP-trees on the comparability graph of a poset.
//!
//! The work list is explicit so that deep trees (threshold graphs produce one
//! level per vertex) cannot exhaust the call stack.

use crate::graph::{co_components_by_label, components_by_label, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Join {
    /// Disconnected: children are the connected components.
    Parallel,
    /// Co-disconnected: children are the complement components.
    Series,
}

#[derive(Debug)]
pub(crate) enum Node {
    Leaf(VertexId),
    Inner { join: Join, children: Vec<usize> },
}

/// Arena of nodes; index 0 is the root and every child index is larger
/// than its parent's. Children are listed by ascending smallest vertex.
#[derive(Debug)]
pub(crate) struct Decomposition {
    pub nodes: Vec<Node>,
    /// Smallest vertex below each node.
    pub min_vertex: Vec<VertexId>,
}

impl Decomposition {
    /// Bottom-up fold over the arena.
    pub fn fold<T>(
        self,
        mut leaf: impl FnMut(VertexId) -> T,
        mut inner: impl FnMut(Join, Vec<(T, VertexId)>) -> T,
    ) -> T {
        let mut built: Vec<Option<T>> = (0..self.nodes.len()).map(|_| None).collect();
        for (id, node) in self.nodes.into_iter().enumerate().rev() {
            let value = match node {
                Node::Leaf(v) => leaf(v),
                Node::Inner { join, children } => {
                    let parts = children
                        .into_iter()
                        .map(|c| (built[c].take().expect("child built"), self.min_vertex[c]))
                        .collect();
                    inner(join, parts)
                }
            };
            built[id] = Some(value);
        }
        built[0].take().expect("nonempty decomposition")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Known {
    Nothing,
    Connected,
    CoConnected,
}

struct Task {
    graph: Graph,
    labels: Vec<VertexId>,
    node: usize,
    known: Known,
}

/// Decomposes `g`, or returns the vertex set (ascending, ids of `g`) of an
/// induced subgraph on at least two vertices that is both connected and
/// co-connected. Requires `g.order() >= 1`.
pub(crate) fn decompose(g: &Graph) -> Result<Decomposition, Vec<VertexId>> {
    assert!(g.order() >= 1, "decompose requires a nonempty graph");
    let mut nodes: Vec<Option<Node>> = vec![None];
    let mut min_vertex = vec![0];
    let mut stack = vec![Task {
        graph: g.clone(),
        labels: g.vertices().collect(),
        node: 0,
        known: Known::Nothing,
    }];

    while let Some(task) = stack.pop() {
        if task.graph.order() == 1 {
            nodes[task.node] = Some(Node::Leaf(task.labels[0]));
            continue;
        }
        let mut split = None;
        if task.known != Known::Connected {
            let comps = components_by_label(&task.graph);
            if comps.len() >= 2 {
                split = Some((Join::Parallel, comps, Known::Connected));
            }
        }
        if split.is_none() && task.known != Known::CoConnected {
            let co = co_components_by_label(&task.graph);
            if co.len() >= 2 {
                split = Some((Join::Series, co, Known::CoConnected));
            }
        }
        let Some((join, blocks, known)) = split else {
            return Err(task.labels);
        };

        let first = nodes.len();
        let children: Vec<usize> = (first..first + blocks.len()).collect();
        nodes[task.node] = Some(Node::Inner {
            join,
            children: children.clone(),
        });
        let subtasks = split_blocks(&task.graph, &task.labels, &blocks);
        drop(task);
        for (child, (graph, labels)) in children.iter().zip(subtasks) {
            nodes.push(None);
            min_vertex.push(labels[0]);
            stack.push(Task {
                graph,
                labels,
                node: *child,
                known,
            });
        }
        // Visit children in block order.
        let len = stack.len();
        stack[len - blocks.len()..].reverse();
    }

    Ok(Decomposition {
        nodes: nodes.into_iter().map(|n| n.expect("every node filled")).collect(),
        min_vertex,
    })
}

/// Induced subgraphs on each block, with labels mapped through `labels`.
fn split_blocks(g: &Graph, labels: &[VertexId], blocks: &[Vec<VertexId>]) -> Vec<(Graph, Vec<VertexId>)> {
    let mut block_of = vec![0usize; g.order()];
    let mut local = vec![0 as VertexId; g.order()];
    for (b, block) in blocks.iter().enumerate() {
        for (i, &v) in block.iter().enumerate() {
            block_of[v as usize] = b;
            local[v as usize] = i as VertexId;
        }
    }
    blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let adj = block
                .iter()
                .map(|&v| {
                    g.adj(v)
                        .iter()
                        .filter(|&&u| block_of[u as usize] == b)
                        .map(|&u| local[u as usize])
                        .collect()
                })
                .collect();
            let sub_labels = block.iter().map(|&v| labels[v as usize]).collect();
            (Graph::from_sorted_adjacency(adj), sub_labels)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn shape(g: &Graph) -> Result<String, Vec<VertexId>> {
        decompose(g).map(|d| {
            d.fold(
                |v| v.to_string(),
                |join, parts| {
                    let tag = match join {
                        Join::Parallel => "P",
                        Join::Series => "S",
                    };
                    let inner: Vec<String> = parts.into_iter().map(|(s, _)| s).collect();
                    format!("{tag}({})", inner.join(","))
                },
            )
        })
    }

    #[test]
    fn splits_diamond() {
        assert_eq!(shape(&diamond()).unwrap(), "S(P(0,3),1,2)");
    }

    #[test]
    fn reports_failing_set() {
        // P4 plus an isolated vertex: the failure is the P4 part only.
        let g = g(5, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(shape(&g).unwrap_err(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn deep_threshold_graph() {
        // Vertex i adjacent to all j > i when i is even: one level per vertex.
        let n = 1000u32;
        let mut edges = Vec::new();
        for i in (0..n).step_by(2) {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        let g = Graph::from_edges(n as usize, edges).unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.nodes.len(), 2 * n as usize - 1);
    }
}
