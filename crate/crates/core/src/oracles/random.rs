//! Seeded generators. The stream is ChaCha8 seeded from a `u64`; each
//! recursion branch draws its own child stream from its parent, so output
//! is stable across platforms and independent of traversal order.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cograph::Cotree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::poset::{Poset, RelationMode};
use crate::sp::SpTree;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn child(rng: &mut ChaCha8Rng) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(rng.next_u64())
}

/// Shape of a random tree with alternating inner kinds; `true` marks the
/// kind chosen for the root.
enum Shape {
    Leaf(VertexId),
    Inner(bool, Vec<Shape>),
}

fn shape(n: usize, seed: Seed) -> Result<Shape> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut rng = seed.rng();
    let mut leaves: Vec<VertexId> = (0..n as VertexId).collect();
    leaves.shuffle(&mut rng);
    let kind = rng.gen_bool(0.5);
    Ok(split(&leaves, kind, &mut rng))
}

fn split(leaves: &[VertexId], kind: bool, rng: &mut ChaCha8Rng) -> Shape {
    if let [v] = leaves {
        return Shape::Leaf(*v);
    }
    let k = rng.gen_range(2..=leaves.len().min(4));
    let mut cuts = rand::seq::index::sample(rng, leaves.len() - 1, k - 1).into_vec();
    cuts.iter_mut().for_each(|c| *c += 1);
    cuts.sort_unstable();
    cuts.push(leaves.len());
    let mut start = 0;
    let mut children = Vec::with_capacity(k);
    for end in cuts {
        let mut sub = child(rng);
        children.push(split(&leaves[start..end], !kind, &mut sub));
        start = end;
    }
    Shape::Inner(kind, children)
}

fn min_leaf(s: &Shape) -> VertexId {
    match s {
        Shape::Leaf(v) => *v,
        Shape::Inner(_, c) => c.iter().map(min_leaf).min().expect("nonempty"),
    }
}

fn to_cotree(s: Shape) -> Cotree {
    match s {
        Shape::Leaf(v) => Cotree::leaf(v),
        Shape::Inner(kind, mut children) => {
            children.sort_by_key(min_leaf);
            let children = children.into_iter().map(to_cotree).collect();
            if kind {
                Cotree::series(children)
            } else {
                Cotree::parallel(children)
            }
        }
    }
}

fn to_sptree(s: Shape) -> SpTree {
    match s {
        Shape::Leaf(v) => SpTree::leaf(v),
        Shape::Inner(kind, mut children) => {
            if kind {
                SpTree::linear(children.into_iter().map(to_sptree).collect())
            } else {
                children.sort_by_key(min_leaf);
                SpTree::disjoint(children.into_iter().map(to_sptree).collect())
            }
        }
    }
}

/// A canonical cotree on leaves `0..n`.
pub fn rand_cotree(n: usize, seed: Seed) -> Result<Cotree> {
    shape(n, seed).map(to_cotree)
}

/// A canonical SP-tree on elements `0..n`; linear children keep their
/// random order.
pub fn rand_sptree(n: usize, seed: Seed) -> Result<SpTree> {
    shape(n, seed).map(to_sptree)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

fn gnp_pairs(n: usize, p: f64, seed: Seed) -> Result<Vec<(VertexId, VertexId)>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    check_probability(p)?;
    let mut rng = seed.rng();
    let n = n as VertexId;
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// Each of the `n(n-1)/2` edges independently with probability `p`.
pub fn rand_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    let pairs = gnp_pairs(n, p, seed)?;
    Graph::from_edges(n, pairs)
}

/// A G(n, p) graph with every edge oriented from smaller to larger id,
/// then transitively closed.
pub fn rand_poset(n: usize, p: f64, seed: Seed) -> Result<Poset> {
    let pairs = gnp_pairs(n, p, seed)?;
    Poset::from_relations(n, &pairs, RelationMode::Covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sizes() {
        for s in 0..5 {
            assert_eq!(rand_cotree(1, Seed(s)).unwrap(), Cotree::leaf(0));
            assert_eq!(rand_sptree(1, Seed(s)).unwrap(), SpTree::leaf(0));
        }
        assert_eq!(rand_cotree(0, Seed(1)), Err(Error::ZeroSize));
        assert_eq!(rand_gnp(6, 0.0, Seed(3)).unwrap().edge_count(), 0);
        assert_eq!(rand_gnp(6, 1.0, Seed(3)).unwrap().edge_count(), 15);
        assert_eq!(rand_gnp(3, 1.5, Seed(3)), Err(Error::InvalidProbability(1.5)));
        assert!(rand_gnp(3, f64::NAN, Seed(3)).is_err());
    }

    #[test]
    fn trees_are_canonical_and_reproducible() {
        for s in 0..50 {
            let t = rand_cotree(30, Seed(s)).unwrap();
            assert!(t.is_canonical());
            assert_eq!(t, rand_cotree(30, Seed(s)).unwrap());
            let u = rand_sptree(30, Seed(s)).unwrap();
            assert!(u.is_canonical());
            assert_eq!(u, rand_sptree(30, Seed(s)).unwrap());
        }
        assert_ne!(rand_cotree(30, Seed(1)), rand_cotree(30, Seed(2)));
    }

    #[test]
    fn poset_orients_by_id() {
        let p = rand_poset(8, 1.0, Seed(0)).unwrap();
        assert_eq!(p.relation_count(), 28);
        assert!(p.less(0, 7));
    }
}
