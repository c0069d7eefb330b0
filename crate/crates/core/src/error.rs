use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter system {label}: {reason}")]
    InvalidSystem { label: String, reason: String },

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    LimitExceeded { order: usize, limit: usize },

    #[error("expected a system of type {expected}, got {got}")]
    WrongType { expected: String, got: String },

    #[error("elements belong to different systems")]
    SystemMismatch,

    #[error("chain construction failed: {0}")]
    ChainConstruction(String),

    #[error("q-analog [n]_q requires n >= 1")]
    ZeroQAnalog,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("exponent factorization did not terminate: {0}")]
    Factorization(String),

    #[error("point {point:?} lies outside the chain product {bounds:?}")]
    OutOfBounds { point: Vec<u32>, bounds: Vec<u32> },

    #[error("the order ideal is empty")]
    EmptyIdeal,

    #[error(
        "the image of the lower interval of {element} is not an order ideal: the code is invalid"
    )]
    NotAnIdeal { element: String },

    #[error("facet order {0} is not a shelling")]
    NotShelling(String),

    #[error("complex is not pure")]
    NonPure,

    #[error("facet order is not a permutation of the facets")]
    BadFacetOrder,

    #[error("size limit exceeded: {what} is {size}, limit {limit}")]
    SizeLimit {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("thin/subthin classification needs more than one facet")]
    SingleFacet,

    #[error("vertex universe of {0} vertices exceeds 128")]
    TooManyVertices(usize),

    #[error("element {0} is not L-principal")]
    NotPrincipal(String),

    #[error("maxima set has {count} elements, above the inclusion-exclusion bound {bound}")]
    TooManyMaxima { count: usize, bound: usize },

    #[error("permutation {0} is not smooth")]
    NotSmooth(String),

    #[error("permutation {0} is not unimodal")]
    NotUnimodal(String),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("codes are incompatible: {0}")]
    CodeMismatch(String),

    #[error("unknown code {name:?} for {system}; available: {available}")]
    UnknownCode {
        name: String,
        system: String,
        available: String,
    },

    #[error("unknown suite {name:?}; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
