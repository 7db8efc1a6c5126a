use thiserror::Error;

use crate::model::{Color, Vertex};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("palette size {colors} exceeds the supported maximum {max}")]
    TooManyColors { colors: usize, max: usize },
    #[error("vertex {vertex} is out of range for order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("({u}, {v}) is a loop, not an edge")]
    LoopEdge { u: Vertex, v: Vertex },
    #[error("edge ({u}, {v}) is already present")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("color {color} is not in the palette of {colors} colors")]
    UnknownColor { color: Color, colors: usize },
    #[error("({u}, {v}) is not an edge of the graph")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("edge ({u}, {v}) carries no color")]
    MissingEdgeColor { u: Vertex, v: Vertex },
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: Vertex },
    #[error("vertex {vertex} is isolated in the induced subgraph")]
    IsolatedInSubgraph { vertex: Vertex },
    #[error("vertex sequence is not a walk at position {position}")]
    NotAWalk { position: usize },
    #[error("walk is not an open path")]
    NotAPath,
    #[error("walk is not a cycle")]
    NotACycle,
    #[error("length {length} is outside the supported range {min}..={max}")]
    LengthOutOfRange { length: usize, min: usize, max: usize },
    #[error("the local graph at vertex {x} is not complete multipartite; witness edges toward {}, {}, {}", witness[0], witness[1], witness[2])]
    NotMultipartite { x: Vertex, witness: [Vertex; 3] },
    #[error("vertex {vertex} is not a member of the given set")]
    VertexNotInSet { vertex: Vertex },
    #[error("vertex {vertex} must not be a member of the given set")]
    VertexInSet { vertex: Vertex },
    #[error("the set is not dependent: the pair ({a}, {b}) has no obstruction")]
    DependenceFails { a: Vertex, b: Vertex },
    #[error("the vertex set is empty")]
    EmptyVertexSet,
    #[error("the tournament is empty")]
    EmptyTournament,
    #[error("the graph is not complete")]
    NotComplete,
    #[error("order {n} is outside the statement range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("at least {required} distinct colors are required, found {found}")]
    TooFewColors { found: usize, required: usize },
    #[error("order {n} exceeds the exhaustive-search bound {bound}")]
    ExhaustiveBoundExceeded { n: usize, bound: usize },
    #[error("the color palette is empty")]
    EmptyPalette,
    #[error("the color sequence is empty")]
    EmptySequence,
    #[error("invalid search spec: {reason}")]
    InvalidSpec { reason: alloc::string::String },
    #[error("not a tournament: {reason}")]
    InvalidTournament { reason: alloc::string::String },
}
