//! Series-parallel posets: decomposition into linear and disjoint sums,
//! the three-layer split around an element with nonempty `C_x`, and the
//! maximal-chain endpoint argument for connected N-free posets.

mod tree;

use serde::{Deserialize, Serialize};

pub use tree::{orient_cotree, sp_tree, sp_tree_to_poset, SpTree};

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};
use crate::poset::{NWitness, Poset};

/// A linear sum `p1 < p2 < p3` read off an element `x` with nonempty `C_x`:
/// `p1 = C⁻_x`, `p3 = C⁺_x`, and `p2` everything else (it contains `x`,
/// `inc(x)` and the comparable elements that miss part of `inc(x)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSplit {
    pub x: VertexId,
    pub p1: VertexSet,
    pub p2: VertexSet,
    pub p3: VertexSet,
}

impl LinearSplit {
    /// Checks the partition and that every cross-layer pair is ordered
    /// upward.
    pub fn is_valid(&self, p: &Poset) -> bool {
        let layers = [&self.p1, &self.p2, &self.p3];
        let total: usize = layers.iter().map(|l| l.len()).sum();
        let union: VertexSet = layers.iter().flat_map(|l| l.iter()).collect();
        let below_all = |lo: &VertexSet, hi: &VertexSet| lo.iter().all(|a| hi.iter().all(|b| p.less(a, b)));
        total == p.order()
            && union.len() == total
            && union.iter().all(|v| (v as usize) < p.order())
            && self.p2.contains(self.x)
            && !(self.p1.is_empty() && self.p3.is_empty())
            && below_all(&self.p1, &self.p2)
            && below_all(&self.p1, &self.p3)
            && below_all(&self.p2, &self.p3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Up,
    Down,
}

/// An endpoint of a maximal chain through `x` that is comparable to every
/// element of `inc(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointWitness {
    pub x: VertexId,
    pub endpoint: VertexId,
    pub side: Side,
}

/// Which procedure `find_n` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NFreeMethod {
    /// Every component of every `inc(x)` must be a module.
    Lemma3,
    /// Scan all 4-tuples.
    Brute,
}

/// Returns the first element `x` (by id) with nonempty `C_x` and the split
/// it induces, or `None` when every `C_x` is empty, i.e. the poset is not a
/// linear sum. Requires a connected poset. N-freeness is not checked up
/// front; if the layers come out unordered the N responsible is returned.
pub fn lemma4_witness(p: &Poset) -> Result<Option<LinearSplit>> {
    if p.order() == 0 {
        return Err(Error::Empty);
    }
    if !p.is_connected() {
        return Err(Error::Disconnected);
    }
    for x in p.elements() {
        let cx = p.cx_sets(x)?;
        if cx.is_empty() {
            continue;
        }
        let inc = p.inc_set(x)?;
        // C'_x: comparable to x but missing some element of inc(x).
        for z in p.below(x).iter().chain(p.above(x)).copied() {
            if cx.lower.contains(z) || cx.upper.contains(z) {
                continue;
            }
            let t = inc.iter().find(|&t| !p.comparable(z, t)).expect("z misses inc(x)");
            if p.less(x, z) {
                if let Some(y) = cx.upper.iter().find(|&y| !p.less(z, y)) {
                    return Err(Error::ContainsN(NWitness([t, y, x, z])));
                }
            } else if let Some(y) = cx.lower.iter().find(|&y| !p.less(y, z)) {
                return Err(Error::ContainsN(NWitness([z, x, y, t])));
            }
        }
        let p2 = p
            .elements()
            .filter(|&v| !cx.lower.contains(v) && !cx.upper.contains(v))
            .collect();
        return Ok(Some(LinearSplit {
            x,
            p1: cx.lower,
            p2: VertexSet::from_sorted(p2),
            p3: cx.upper,
        }));
    }
    Ok(None)
}

/// Takes the maximal chain through `x` and returns its top when that is
/// comparable to all of `inc(x)`, otherwise its bottom. For a connected
/// N-free poset one of the two always qualifies; if neither does, the
/// input broke that precondition and the failing pairs are reported.
pub fn endpoint_witness(p: &Poset, x: VertexId) -> Result<EndpointWitness> {
    let chain = p.maximal_chain_through(x)?;
    if !p.is_connected() {
        return Err(Error::Disconnected);
    }
    let inc = p.inc_set(x)?;
    let miss = |e: VertexId| inc.iter().find(|&t| !p.comparable(e, t));
    let top_miss = match miss(chain.top) {
        None => {
            return Ok(EndpointWitness {
                x,
                endpoint: chain.top,
                side: Side::Up,
            })
        }
        Some(t) => t,
    };
    match miss(chain.bottom) {
        None => Ok(EndpointWitness {
            x,
            endpoint: chain.bottom,
            side: Side::Down,
        }),
        Some(bottom_miss) => Err(Error::EndpointViolation {
            x,
            top: chain.top,
            top_miss,
            bottom: chain.bottom,
            bottom_miss,
        }),
    }
}

/// `None` when `p` is N-free, otherwise an N.
pub fn find_n(p: &Poset, method: NFreeMethod) -> Option<NWitness> {
    match method {
        NFreeMethod::Brute => lex_scan_n(p),
        NFreeMethod::Lemma3 => p.elements().find_map(|x| {
            let comps = p.inc_components(x).expect("x in range");
            comps.blocks().iter().find_map(|c| module_violation(p, x, c))
        }),
    }
}

pub fn is_nfree(p: &Poset, method: NFreeMethod) -> bool {
    find_n(p, method).is_none()
}

/// If the component `c` of `inc(x)` is not a module, some `y` comparable
/// to `x` splits it into the part comparable to `y` and the rest; an
/// edge of the comparability graph across that split gives an N.
fn module_violation(p: &Poset, x: VertexId, c: &VertexSet) -> Option<NWitness> {
    let y = p.elements().filter(|&v| !c.contains(v)).find(|&v| {
        let k = c.iter().filter(|&a| p.comparable(v, a)).count();
        k != 0 && k != c.len()
    })?;
    let y_below = c.iter().any(|a| p.less(y, a));
    for z in c.iter().filter(|&a| p.comparable(y, a)) {
        for t in c.iter().filter(|&t| !p.comparable(y, t)) {
            if y_below && p.less(t, z) {
                return Some(NWitness([t, z, y, x]));
            }
            if !y_below && p.less(z, t) {
                return Some(NWitness([x, y, z, t]));
            }
        }
    }
    None
}

/// Lexicographically first N, pruning on each coordinate in turn.
pub(crate) fn lex_scan_n(p: &Poset) -> Option<NWitness> {
    for a in p.elements() {
        for &b in p.above(a) {
            for &c in p.below(b) {
                if c == a || p.comparable(a, c) {
                    continue;
                }
                for &d in p.above(c) {
                    if d != b && !p.comparable(a, d) && !p.comparable(b, d) {
                        return Some(NWitness([a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}
