use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arc ({0}, {1}) is not present")]
    ArcNotPresent(usize, usize),
    #[error("no loop at vertex {0}")]
    LoopNotPresent(usize),
    #[error("vertex set is not a sink class of the condensation")]
    NotASink,
    #[error("{what} limit exceeded: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("vertex {0} is contained in no hyperedge")]
    UncoverableVertex(usize),
    #[error("vertex {0} lies in no hyperedge; the fractional independence LP is unbounded")]
    Unbounded(usize),
    #[error("bag vertex {0} occurs in no incident relation")]
    UncoveredBagVertex(usize),
    #[error("relation scope {0:?} is not contained in any bag")]
    ScopeNotCovered(Vec<usize>),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("input digraphs are isomorphic")]
    IsomorphicInputs,
    #[error("basis coefficient of a support digraph is zero")]
    ZeroCoefficient,
    #[error("colouring is not surjective: no host vertex has colour {0}")]
    NotSurjective(usize),
    #[error("colouring is not a homomorphism: host arc ({0}, {1}) has no image arc")]
    NotAHomomorphism(usize, usize),
    #[error("partition is not a valid partition of {0} vertices")]
    InvalidPartition(usize),
    #[error("digraph is not a quotient of the pattern")]
    NotAQuotient,
    #[error("input pattern must be loop-free")]
    LoopedPattern,
    #[error("internal assertion failed: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
