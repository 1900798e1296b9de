use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the crate. All constructors and operators validate
/// their inputs and return one of these instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("expected {want} entries, got {got}")]
    LengthMismatch { got: usize, want: usize },

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("graphs have different underlying edge sets")]
    UnderlyingMismatch,

    #[error("k = {k} out of range: need 1 <= k <= {max}")]
    KOutOfRange { k: usize, max: usize },

    #[error("rank {rank} out of range: only {count} objects exist")]
    RankOutOfRange { rank: usize, count: usize },

    #[error("invalid k-subset: {0}")]
    InvalidKSubset(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot compose permutations of sizes {a} and {b}")]
    PermSizeMismatch { a: usize, b: usize },

    #[error("matrix would have {rows} rows, above the limit of {max}")]
    SizeLimit { rows: usize, max: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("unsupported partition: {0}")]
    UnsupportedPartition(String),

    #[error("vertex map is not a bijection: {0}")]
    NonBijectiveMap(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("enumeration of connected graphs on {n} vertices exceeds the supported maximum of {max}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
