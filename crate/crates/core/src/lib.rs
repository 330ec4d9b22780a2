//! Recognition and decomposition of P4-free graphs (cographs) and N-free
//! posets, with self-checking witnesses and brute-force oracles.
//!
//! Graphs and posets use dense ids `0..n`. Every negative answer carries a
//! certificate (an induced P4 or an N) that can be revalidated on its own,
//! and every positive decomposition can be turned back into the input.

pub mod cograph;
mod decompose;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod poset;
pub mod sp;
pub mod text;

pub use cograph::{
    corollary1_select, cotree, cotree_to_graph, gen_h, gen_h_window, inc_components, is_cograph, lemma2_partition,
    theorem2_witness, Cotree, Lemma2Partition, P4Witness, Theorem2Witness,
};
pub use error::{Error, Result};
pub use graph::{Graph, Partition, VertexId, VertexSet};
pub use poset::{CxSets, MaximalChain, NWitness, Poset, RelationMode};
pub use sp::{
    endpoint_witness, find_n, is_nfree, lemma4_witness, orient_cotree, sp_tree, sp_tree_to_poset, EndpointWitness,
    LinearSplit, NFreeMethod, Side, SpTree,
};
