//! Crate-wide error type. Every fallible operation reports one of these
//! variants; panics are reserved for violated internal invariants.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // ---- graph construction ----
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("a cubic graph needs an even vertex count of at least 4, got {0}")]
    BadCubicOrder(usize),

    // ---- splits ----
    #[error("split assigns vertex {vertex} outside the expected domain")]
    SplitOutsideDomain { vertex: usize },
    #[error("split is missing vertex {vertex}")]
    SplitMissingVertex { vertex: usize },
    #[error("vertex {0} assigned to both sides")]
    SplitContradiction(usize),

    // ---- trees ----
    #[error("edge set is not a tree (connected and acyclic)")]
    NotATree,
    #[error("not a cubic tree: vertex {vertex} has degree {degree}, want 1 or 3")]
    NotCubicTree { vertex: usize, degree: usize },
    #[error("tree has {got} vertices but this operation needs at least {need}")]
    TreeTooSmall { need: usize, got: usize },
    #[error("leaf split must assign exactly the leaves: vertex {vertex} is {problem}")]
    BadLeafSplit { vertex: usize, problem: &'static str },
    #[error("root {0} is not a leaf of the tree")]
    RootNotLeaf(usize),
    #[error("root {0} must be assigned to side X")]
    RootOnYSide(usize),
    #[error("tree on {got} vertices exceeds the exhaustive-search bound {bound}")]
    TreeAboveBound { got: usize, bound: usize },

    // ---- constructors ----
    #[error("split is not a bisection (imbalance {0})")]
    NotABisection(i64),
    #[error("split is not nearly external ({0} offending vertices)")]
    NotNearlyExternal(usize),
    #[error("tree is not a subgraph of the host graph: edge {0}-{1} missing")]
    TreeNotSubgraph(usize, usize),
    #[error("graph minus the tree edges is not bipartite")]
    ComplementNotBipartite,
    #[error("decomposition is invalid: {0}")]
    BadDecomposition(&'static str),
    #[error("edge colouring is not a proper 3-edge-colouring: {0}")]
    BadEdgeColouring(&'static str),
    #[error("flow is invalid: {0}")]
    BadFlow(&'static str),
    #[error("flow order k must be between 2 and 6, got {0}")]
    FlowOrderOutOfRange(u32),

    // ---- oracle ----
    #[error("graph on {got} vertices exceeds the oracle bound {bound}")]
    GraphAboveBound { got: usize, bound: usize },

    // ---- text formats ----
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("graph6: invalid byte {byte:#04x} at position {pos}")]
    Graph6Byte { byte: u8, pos: usize },
    #[error("edge list, line {line}: {problem}")]
    EdgeList { line: usize, problem: String },

    // ---- generators ----
    #[error("generator: {0}")]
    Generator(String),

    // ---- command line ----
    #[error("{0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
