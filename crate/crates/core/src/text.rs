//! Line-oriented text formats for graphs and posets.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! A graph file has one edge `u v` per line; a poset file has one relation
//! per line, written `u v` or `u < v`. With an `n <order>` header, labels
//! are used as ids directly and must be below the order. Without one, the
//! distinct labels are numbered in increasing order and the label table is
//! kept so results can be reported in the caller's labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::poset::{Poset, RelationMode};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: VertexId },

    #[error("line {line}: edge {u}-{v} already given on line {first}")]
    DuplicateEdge {
        line: usize,
        u: VertexId,
        v: VertexId,
        first: usize,
    },

    #[error("line {line}: reflexive relation {label} < {label}")]
    SelfRelation { line: usize, label: VertexId },

    #[error("line {line}: label {label} out of range for header order {order}")]
    OutOfRange { line: usize, label: VertexId, order: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed instance with `labels[id]` giving the label of each dense id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled<T> {
    pub value: T,
    pub labels: Vec<VertexId>,
}

impl<T> Labeled<T> {
    pub fn label(&self, id: VertexId) -> VertexId {
        self.labels[id as usize]
    }

    /// Dense id of a label, if present.
    pub fn id_of(&self, label: VertexId) -> Option<VertexId> {
        self.labels.binary_search(&label).ok().map(|i| i as VertexId)
    }
}

struct Raw {
    order: Option<usize>,
    pairs: Vec<(usize, VertexId, VertexId)>,
}

fn parse_label(tok: &str, line: usize) -> Result<VertexId, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn scan(text: &str, allow_lt: bool) -> Result<Raw, ParseError> {
    let mut raw = Raw {
        order: None,
        pairs: Vec::new(),
    };
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] == "n" {
            if raw.order.is_some() || !raw.pairs.is_empty() {
                return Err(syntax(line_no, "header must come once, before any pair"));
            }
            let [_, count] = toks[..] else {
                return Err(syntax(line_no, "header must be `n <order>`"));
            };
            let count = count
                .parse()
                .map_err(|_| syntax(line_no, format!("bad order {count:?}")))?;
            raw.order = Some(count);
            continue;
        }
        let (u, v) = match toks[..] {
            [u, v] => (u, v),
            [u, "<", v] if allow_lt => (u, v),
            _ => {
                let shape = if allow_lt { "`u v` or `u < v`" } else { "`u v`" };
                return Err(syntax(line_no, format!("expected {shape}")));
            }
        };
        raw.pairs
            .push((line_no, parse_label(u, line_no)?, parse_label(v, line_no)?));
    }
    Ok(raw)
}

/// Resolves labels to dense ids, returning the order and label table.
fn resolve(raw: &mut Raw) -> Result<(usize, Vec<VertexId>), ParseError> {
    match raw.order {
        Some(order) => {
            for &(line, u, v) in &raw.pairs {
                for label in [u, v] {
                    if label as usize >= order {
                        return Err(ParseError::OutOfRange { line, label, order });
                    }
                }
            }
            Ok((order, (0..order as VertexId).collect()))
        }
        None => {
            let labels: Vec<VertexId> = raw
                .pairs
                .iter()
                .flat_map(|&(_, u, v)| [u, v])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let index: HashMap<VertexId, VertexId> =
                labels.iter().enumerate().map(|(i, &l)| (l, i as VertexId)).collect();
            for pair in &mut raw.pairs {
                pair.1 = index[&pair.1];
                pair.2 = index[&pair.2];
            }
            Ok((labels.len(), labels))
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Labeled<Graph>, ParseError> {
    let mut raw = scan(text, false)?;
    let mut seen = HashMap::new();
    for &(line, u, v) in &raw.pairs {
        if u == v {
            return Err(ParseError::SelfLoop { line, label: u });
        }
        if let Some(&first) = seen.get(&(u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u, v, first });
        }
        seen.insert((u.min(v), u.max(v)), line);
    }
    let (order, labels) = resolve(&mut raw)?;
    let graph = Graph::from_edges(order, raw.pairs.iter().map(|&(_, u, v)| (u, v))).expect("pairs checked above");
    Ok(Labeled { value: graph, labels })
}

/// Poset relations as dense pairs; repeated relations are merged. Building
/// the poset can still fail on a cycle or, in full mode, on a missing
/// implied relation; those errors are in dense ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetInput {
    pub order: usize,
    pub labels: Vec<VertexId>,
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl PosetInput {
    pub fn build(&self, mode: RelationMode) -> crate::Result<Labeled<Poset>> {
        let value = Poset::from_relations(self.order, &self.pairs, mode)?;
        Ok(Labeled {
            value,
            labels: self.labels.clone(),
        })
    }
}

pub fn parse_poset(text: &str) -> Result<PosetInput, ParseError> {
    let mut raw = scan(text, true)?;
    if let Some(&(line, label, _)) = raw.pairs.iter().find(|(_, u, v)| u == v) {
        return Err(ParseError::SelfRelation { line, label });
    }
    let (order, labels) = resolve(&mut raw)?;
    let pairs: Vec<_> = raw
        .pairs
        .iter()
        .map(|&(_, u, v)| (u, v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(PosetInput { order, labels, pairs })
}

/// Header plus one edge per line.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Header plus every relation of the closed order as `u < v`.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("n {}\n", p.order());
    for (u, v) in p.relations() {
        writeln!(out, "{u} < {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::poset::fixtures as pf;

    #[test]
    fn header_uses_labels_directly() {
        let g = parse_graph("# paw\nn 4\n0 1\n0 2\n1 2\n1 3\n").unwrap();
        assert_eq!(g.value, paw());
        assert_eq!(g.labels, vec![0, 1, 2, 3]);
        let single = parse_graph("n 1\n").unwrap();
        assert_eq!(single.value.order(), 1);
    }

    #[test]
    fn sparse_labels_are_remapped() {
        let g = parse_graph("10 30\n30 20\n").unwrap();
        assert_eq!(g.labels, vec![10, 20, 30]);
        assert_eq!(g.value.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(g.id_of(20), Some(1));
        assert_eq!(g.id_of(25), None);
    }

    #[test]
    fn graph_errors_name_the_line() {
        assert_eq!(
            parse_graph("0 1\n# c\n2 2\n"),
            Err(ParseError::SelfLoop { line: 3, label: 2 })
        );
        assert_eq!(
            parse_graph("0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge {
                line: 2,
                u: 1,
                v: 0,
                first: 1
            })
        );
        assert_eq!(
            parse_graph("n 2\n0 2\n"),
            Err(ParseError::OutOfRange {
                line: 2,
                label: 2,
                order: 2
            })
        );
        assert!(matches!(parse_graph("0 x\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_graph("0 < 1\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("0 1\nn 3\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_graph("0 -1\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn poset_formats() {
        let input = parse_poset("0 < 1\n2 1\n2 < 3\n2 3\n").unwrap();
        assert_eq!(input.pairs, vec![(0, 1), (2, 1), (2, 3)]);
        assert_eq!(input.build(RelationMode::Covers).unwrap().value, pf::n_poset());
        assert_eq!(
            parse_poset("1 1\n"),
            Err(ParseError::SelfRelation { line: 1, label: 1 })
        );
        let cyc = parse_poset("5 < 7\n7 < 5\n").unwrap();
        assert_eq!(cyc.build(RelationMode::Covers), Err(crate::Error::Cycle(0, 1)));
    }

    #[test]
    fn writers_round_trip() {
        let g = diamond();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap().value, g);
        let p = pf::diamond();
        let text = write_poset(&p);
        let back = parse_poset(&text).unwrap().build(RelationMode::Full).unwrap();
        assert_eq!(back.value, p);
    }
}
