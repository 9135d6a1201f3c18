use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("operation requires a non-empty vertex set")]
    EmptyVertexSet,
    #[error("cycle graph requires at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("sequential join requires a non-empty part list")]
    EmptyJoinList,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("graph order {n} exceeds the canonical-form cap {cap}")]
    CanonCapExceeded { n: usize, cap: usize },
    #[error("graph order {n} exceeds the enumeration cap {cap}")]
    EnumCapExceeded { n: usize, cap: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("invalid class spec: {0}")]
    InvalidSpec(String),
    #[error("graph order {got} does not match class order {expected}")]
    OrderMismatch { got: usize, expected: usize },
    #[error("the requested family is empty: {0}")]
    EmptyFamily(String),
}
