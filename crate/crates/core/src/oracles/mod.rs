//! Brute-force ground truth and test-bed generation.
//!
//! Everything here works from the raw adjacency or order relation only and
//! makes no use of the decomposition engines, so it can be used to check
//! them. The scanners are exponential or quartic; size guards are hard
//! errors.

pub mod compare;
mod fixture;
mod random;

pub use fixture::{FixtureKind, FixtureRecord, GraphPayload, Payload, PosetPayload};
pub use random::{rand_cotree, rand_gnp, rand_poset, rand_sptree, Seed};

use crate::cograph::P4Witness;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::poset::{NWitness, Poset, RelationMode};

pub const COGRAPH_DEF_LIMIT: usize = 12;
pub const MODULE_LIMIT: usize = 20;
pub const GRAPH_ENUM_LIMIT: usize = 6;
pub const POSET_ENUM_LIMIT: usize = 4;

fn guard(what: &'static str, limit: usize, requested: usize) -> Result<()> {
    if requested > limit {
        return Err(Error::Guard { what, limit, requested });
    }
    Ok(())
}

/// The 12 ways to read four vertices as a path, one per reversal pair.
const LABELINGS: [[usize; 4]; 12] = [
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

/// First induced P4 over 4-subsets in lexicographic order, trying every
/// path labeling of each subset.
pub fn brute_p4(g: &Graph) -> Option<P4Witness> {
    let n = g.order() as VertexId;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    for l in LABELINGS {
                        let w = P4Witness(l.map(|i| q[i]));
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

/// First N `(a, b, c, d)` in lexicographic tuple order.
pub fn brute_n(p: &Poset) -> Option<NWitness> {
    let n = p.order() as VertexId;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let w = NWitness([a, b, c, d]);
                    if w.is_valid(p) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn graph_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.vertices().filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u))
        .collect()
}

/// Whether the vertices of `set` are connected using `adj`.
fn mask_connected(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut grown = seen;
        for (v, &nb) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                grown |= nb & set;
            }
        }
        if grown == seen {
            return seen == set;
        }
        seen = grown;
    }
}

/// Evaluates the cograph definition literally: every induced subgraph on
/// at least two vertices is disconnected or has a disconnected complement.
pub fn brute_cograph_def(g: &Graph) -> Result<bool> {
    let n = g.order();
    guard("brute_cograph_def order", COGRAPH_DEF_LIMIT, n)?;
    let adj = graph_masks(g);
    let full = (1u32 << n) - 1;
    let co: Vec<u32> = (0..n).map(|v| !adj[v] & full & !(1 << v)).collect();
    Ok((0..=full)
        .filter(|s| s.count_ones() >= 2)
        .all(|s| !mask_connected(&adj, s) || !mask_connected(&co, s)))
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

fn is_trivial(mask: u32, n: usize) -> bool {
    mask.count_ones() <= 1 || mask.count_ones() as usize == n
}

/// All vertex sets `A` such that each outside vertex sees all or none of
/// `A`, trivial ones included, in increasing bitmask order.
pub fn enumerate_modules(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    guard("enumerate_modules order", MODULE_LIMIT, n)?;
    let adj = graph_masks(g);
    Ok((0..1u32 << n)
        .filter(|&a| {
            (0..n).filter(|v| a >> v & 1 == 0).all(|v| {
                let seen = adj[v] & a;
                seen == 0 || seen == a
            })
        })
        .map(mask_to_set)
        .collect())
}

/// Only the empty set, singletons and the whole vertex set are modules.
pub fn is_prime_graph(g: &Graph) -> Result<bool> {
    let n = g.order();
    Ok(enumerate_modules(g)?.iter().all(|m| is_trivial(mask_of(m), n)))
}

fn mask_of(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

/// All element sets `A` such that each outside element is below all of
/// `A`, above all of it, or neither for every member.
pub fn enumerate_poset_modules(p: &Poset) -> Result<Vec<VertexSet>> {
    let n = p.order();
    guard("enumerate_poset_modules order", MODULE_LIMIT, n)?;
    let up: Vec<u32> = p
        .elements()
        .map(|v| p.above(v).iter().fold(0, |m, u| m | 1 << u))
        .collect();
    let down: Vec<u32> = p
        .elements()
        .map(|v| p.below(v).iter().fold(0, |m, u| m | 1 << u))
        .collect();
    Ok((0..1u32 << n)
        .filter(|&a| {
            (0..n).filter(|v| a >> v & 1 == 0).all(|v| {
                let over = up[v] & a;
                let under = down[v] & a;
                (over == 0 || over == a) && (under == 0 || under == a)
            })
        })
        .map(mask_to_set)
        .collect())
}

pub fn is_prime_poset(p: &Poset) -> Result<bool> {
    let n = p.order();
    Ok(enumerate_poset_modules(p)?.iter().all(|m| is_trivial(mask_of(m), n)))
}

fn pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    let n = n as VertexId;
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// All labeled graphs on `n` vertices, one per edge subset.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    guard("enumerate_graphs order", GRAPH_ENUM_LIMIT, n)?;
    let all = pairs(n);
    Ok((0..1u64 << all.len()).map(move |mask| {
        let edges = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("distinct pairs")
    }))
}

/// All labeled strict partial orders on `n` elements: every relation on
/// ordered pairs that is antisymmetric and transitive.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    guard("enumerate_posets order", POSET_ENUM_LIMIT, n)?;
    let ordered: Vec<(VertexId, VertexId)> = pairs(n).into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    Ok((0..1u64 << ordered.len()).filter_map(move |mask| {
        let rel: Vec<_> = ordered
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &r)| r)
            .collect();
        let holds = |a, b| rel.contains(&(a, b));
        let antisymmetric = rel.iter().all(|&(a, b)| !holds(b, a));
        let transitive = rel
            .iter()
            .all(|&(a, b)| rel.iter().all(|&(c, d)| c != b || holds(a, d)));
        (antisymmetric && transitive)
            .then(|| Poset::from_relations(n, &rel, RelationMode::Full).expect("closed and acyclic"))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::gen_h;
    use crate::graph::fixtures::*;
    use crate::poset::fixtures as pf;

    #[test]
    fn labelings_cover_every_path_once() {
        let mut seen = std::collections::HashSet::new();
        for l in LABELINGS {
            let mut rev = l;
            rev.reverse();
            assert!(seen.insert(l.min(rev)));
        }
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn brute_p4_examples() {
        assert_eq!(brute_p4(&p4()), Some(P4Witness([0, 1, 2, 3])));
        assert_eq!(brute_p4(&c4()), None);
        assert_eq!(brute_p4(&gen_h(8).unwrap()), None);
    }

    #[test]
    fn brute_n_examples() {
        assert_eq!(brute_n(&pf::n_poset()), Some(NWitness([0, 1, 2, 3])));
        assert_eq!(brute_n(&Poset::antichain(4)), None);
        assert_eq!(brute_n(&pf::diamond()), None);
    }

    #[test]
    fn cograph_def_examples() {
        assert_eq!(brute_cograph_def(&p4()), Ok(false));
        assert_eq!(brute_cograph_def(&complete(3)), Ok(true));
        assert_eq!(brute_cograph_def(&diamond()), Ok(true));
        assert!(matches!(
            brute_cograph_def(&Graph::empty(13)),
            Err(Error::Guard { limit: 12, .. })
        ));
    }

    #[test]
    fn module_examples() {
        let m = enumerate_modules(&p4()).unwrap();
        assert!(m.iter().all(|s| s.len() <= 1 || s.len() == 4));
        assert_eq!(is_prime_graph(&p4()), Ok(true));
        assert_eq!(enumerate_modules(&complete(2)).unwrap().len(), 4);
        assert!(enumerate_modules(&paw()).unwrap().contains(&VertexSet::from([0, 2])));
        assert!(enumerate_modules(&Graph::empty(21)).is_err());
    }

    #[test]
    fn poset_module_examples() {
        let m = enumerate_poset_modules(&pf::chain(3)).unwrap();
        assert!(m.contains(&VertexSet::from([0, 1])));
        assert!(!m.contains(&VertexSet::from([0, 2])));
        assert_eq!(is_prime_poset(&pf::n_poset()), Ok(true));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_posets(2).unwrap().count(), 3);
        assert_eq!(enumerate_posets(3).unwrap().count(), 19);
        assert_eq!(enumerate_posets(4).unwrap().count(), 219);
        assert!(enumerate_graphs(7).is_err());
        assert!(enumerate_posets(5).is_err());
    }
}
