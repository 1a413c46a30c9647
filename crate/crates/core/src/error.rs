use thiserror::Error;

/// Errors produced by graph construction, geodesic counting, and the
/// verification scans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("shortest-path count exceeded the 64-bit range")]
    CountOverflow,

    #[error("geodesic enumeration exceeded the cap of {cap} paths")]
    OutputLimitExceeded { cap: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("infeasible strongly regular parameters ({v}, {k}, {lambda}, {mu})")]
    InfeasibleParameters {
        v: usize,
        k: usize,
        lambda: usize,
        mu: usize,
    },

    #[error("graph has diameter {actual}, expected {expected}")]
    WrongDiameter { expected: u32, actual: u32 },

    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },

    #[error("graph has {n} vertices, at most {max} supported")]
    TooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
