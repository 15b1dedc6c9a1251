use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("malformed permutation input: {0}")]
    Permutation(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("invalid lattice action: {0}")]
    InvalidAction(String),
    #[error("relation has dimension {got}, lattice has {expected} elements")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("edge ({lower}, {upper}) is not an order relation in the lattice")]
    MalformedEdge { lower: usize, upper: usize },
    #[error("transfer systems live on different lattices")]
    LatticeMismatch,
    #[error("lattice has {size} elements, enumeration cap is {cap}")]
    EnumerationCap { size: usize, cap: usize },
    #[error("supplied enumeration has {got} systems, expected {expected}")]
    IncompleteEnumeration { expected: usize, got: usize },
    #[error("lifting criterion requires a lossless group")]
    Lossy,
    #[error("no closed-form width for {0}")]
    NoFormula(String),
    #[error("{0}")]
    Invalid(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
