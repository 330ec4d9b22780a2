use thiserror::Error;

use crate::cograph::P4Witness;
use crate::graph::VertexId;
use crate::poset::NWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: VertexId, order: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("reflexive relation {0} < {0}")]
    SelfRelation(VertexId),

    #[error("cycle error: relation {0} < {1} closes a cycle")]
    Cycle(VertexId, VertexId),

    #[error("relation is not transitively closed: {0} < {1} is implied but missing")]
    NotClosed(VertexId, VertexId),

    #[error("input must be connected")]
    Disconnected,

    #[error("input must be nonempty")]
    Empty,

    #[error("vertex {0} has no neighbor")]
    Isolated(VertexId),

    #[error("vertex set is not a connected component of inc({0})")]
    NotIncComponent(VertexId),

    #[error("induced P4 {0}")]
    ContainsP4(P4Witness),

    #[error("induced N {0}")]
    ContainsN(NWitness),

    #[error(
        "no maximal-chain endpoint through {x} is comparable to all of inc({x}): \
         top {top} misses {top_miss}, bottom {bottom} misses {bottom_miss}"
    )]
    EndpointViolation {
        x: VertexId,
        top: VertexId,
        top_miss: VertexId,
        bottom: VertexId,
        bottom_miss: VertexId,
    },

    #[error("duplicate leaf {0}")]
    DuplicateLeaf(VertexId),

    #[error("leaf ids must cover 0..{order}, {missing} is missing")]
    MissingLeaf { missing: VertexId, order: usize },

    #[error("malformed tree: {0}")]
    MalformedTree(&'static str),

    #[error("{what} supports at most {limit}, got {requested}")]
    Guard {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("size must be at least 1")]
    ZeroSize,
}

impl Error {
    pub(crate) fn out_of_range(vertex: VertexId, order: usize) -> Self {
        Error::OutOfRange { vertex, order }
    }
}
