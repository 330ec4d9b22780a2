//! Newline-delimited JSON records for regression corpora.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::poset::{Poset, RelationMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureKind {
    Graph,
    Poset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPayload {
    pub order: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for GraphPayload {
    fn from(g: &Graph) -> Self {
        GraphPayload {
            order: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphPayload {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.order, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

/// The full (closed) relation, one `[u, v]` per `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetPayload {
    pub order: usize,
    pub relations: Vec<[VertexId; 2]>,
}

impl From<&Poset> for PosetPayload {
    fn from(p: &Poset) -> Self {
        PosetPayload {
            order: p.order(),
            relations: p.relations().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl PosetPayload {
    pub fn to_poset(&self) -> Result<Poset> {
        let pairs: Vec<_> = self.relations.iter().map(|&[u, v]| (u, v)).collect();
        Poset::from_relations(self.order, &pairs, RelationMode::Full)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Graph(GraphPayload),
    Poset(PosetPayload),
}

/// `{"kind": "graph" | "poset", "seed": .., "payload": ..}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub kind: FixtureKind,
    pub seed: u64,
    pub payload: Payload,
}

impl FixtureRecord {
    pub fn graph(g: &Graph, seed: u64) -> Self {
        FixtureRecord {
            kind: FixtureKind::Graph,
            seed,
            payload: Payload::Graph(GraphPayload::from(g)),
        }
    }

    pub fn poset(p: &Poset, seed: u64) -> Self {
        FixtureRecord {
            kind: FixtureKind::Poset,
            seed,
            payload: Payload::Poset(PosetPayload::from(p)),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::paw;
    use crate::poset::fixtures::n_poset;

    #[test]
    fn graph_line_round_trip() {
        let r = FixtureRecord::graph(&paw(), 9);
        let line = r.to_line();
        assert_eq!(
            line,
            r#"{"kind":"graph","seed":9,"payload":{"order":4,"edges":[[0,1],[0,2],[1,2],[1,3]]}}"#
        );
        let back = FixtureRecord::from_line(&line).unwrap();
        let Payload::Graph(payload) = back.payload else {
            panic!()
        };
        assert_eq!(payload.to_graph().unwrap(), paw());
    }

    #[test]
    fn poset_line_round_trip() {
        let r = FixtureRecord::poset(&n_poset(), 0);
        let back = FixtureRecord::from_line(&r.to_line()).unwrap();
        assert_eq!(back.kind, FixtureKind::Poset);
        let Payload::Poset(payload) = back.payload else {
            panic!()
        };
        assert_eq!(payload.to_poset().unwrap(), n_poset());
    }
}
