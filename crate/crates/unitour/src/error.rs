use thiserror::Error;

/// Errors raised when a value violates a structural invariant or an
/// operation's input lies outside its domain.
///
/// Messages name the violated requirement so they can be surfaced verbatim
/// as CLI diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge ({init}, {fin})")]
    DuplicateEdge { init: usize, fin: usize },

    #[error("edge ({init}, {fin}) is not an edge of the digraph")]
    MissingEdge { init: usize, fin: usize },

    #[error("vertex {vertex} has a loop, but the digraph must be loopless")]
    UnexpectedLoop { vertex: usize },

    #[error("vertex {vertex} is isolated (indegree + outdegree = 0)")]
    IsolatedVertex { vertex: usize },

    #[error(
        "digraph is not balanced: vertex {vertex} has indegree {indeg} and outdegree {outdeg}"
    )]
    NotBalanced {
        vertex: usize,
        indeg: usize,
        outdeg: usize,
    },

    #[error("digraph is not strongly connected")]
    NotConnected,

    #[error("digraph has no Eulerian tour")]
    NoEulerianTour,

    #[error("digraph has more than one Eulerian tour up to cyclic shift")]
    MultipleEulerianTours,

    #[error("vertex {root} has {count} spanning arborescences into it, expected exactly 1")]
    ArborescenceCountNotOne { root: usize, count: usize },

    #[error("vertex {vertex} has indegree {indeg} and outdegree {outdeg}, expected 2 and 2")]
    NotTwoRegular {
        vertex: usize,
        indeg: usize,
        outdeg: usize,
    },

    #[error("edge sequence is empty")]
    EmptyTour,

    #[error("edges ({0}, {1}) and ({2}, {3}) are not chained: the tour must be a closed walk")]
    BrokenTourChain(usize, usize, usize, usize),

    #[error("not a rooted plane tree: {0}")]
    MalformedTree(String),

    #[error("the leftmost child of the root must be vertex 1, found {found:?}")]
    RootNotAnchoredAtOne { found: Option<usize> },

    #[error("vertex 2 must lie in the subtree rooted at vertex 1")]
    TwoNotUnderOne,

    #[error("malformed parenthesis arrangement: {0}")]
    MalformedArrangement(String),

    #[error("arrangement is not valid: pairs {first} and {second} are interlaced")]
    InterlacedPairs { first: usize, second: usize },

    #[error("{operation} requires n >= {min}, got n = {n}")]
    OrderTooSmall {
        operation: &'static str,
        min: usize,
        n: usize,
    },

    #[error("exhaustive search supports 2 <= n <= {max}, got n = {n}")]
    SearchOutOfRange { n: usize, max: usize },

    #[error("vertex {vertex} has outdegree {outdeg} (every vertex must have outdegree 1 or 2)")]
    OutdegreeNotOneOrTwo { vertex: usize, outdeg: usize },
}
