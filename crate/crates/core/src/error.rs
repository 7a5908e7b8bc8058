use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wrong length: expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("value {value} at index {index} is out of range 0..={bound}")]
    OutOfRange { index: usize, value: i64, bound: usize },

    #[error("sequence is not weakly increasing at index {index}")]
    NotMonotone { index: usize },

    #[error("wrap bound violated: last entry {last} exceeds first entry {first} + {period}")]
    WrapViolation { first: i64, last: i64, period: usize },

    #[error("window is not normalized: first entry {first} not in 0..={bound}")]
    NotNormalized { first: i64, bound: usize },

    #[error("endpoint map must send 0 to 0 and {src} to {tgt}")]
    NotEndpointPreserving { src: usize, tgt: usize },

    #[error("index {index} out of range for {what} (bound {bound})")]
    IndexOutOfRange { what: &'static str, index: usize, bound: usize },

    #[error("degree mismatch: cannot compose a map out of [{left}] after a map into [{right}]")]
    DegreeMismatch { left: usize, right: usize },

    #[error("resource limit exceeded: {what} would need {needed} items (limit {limit})")]
    ResourceLimit { what: &'static str, needed: u128, limit: u128 },

    #[error("map is not cyclically monotone")]
    NotCyclicallyMonotone,

    #[error("fiber order over {fiber} is incompatible with the cyclic order")]
    IncompatibleFiberOrder { fiber: usize },

    #[error("degree {degree} exceeds truncation {truncation}")]
    TruncationExceeded { degree: usize, truncation: usize },

    #[error("truncation too low: level {level} still has {count} nondegenerate elements")]
    TruncationTooLow { level: usize, count: usize },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("crossed simplicial group axiom failure: {0}")]
    AxiomFailure(String),

    #[error("multiplication table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("multiplication table has no two-sided identity")]
    NoIdentity,

    #[error("invalid presheaf: {0}")]
    InvalidPresheaf(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// A stable kebab-case name for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::WrongLength { .. } => "wrong-length",
            Error::OutOfRange { .. } => "out-of-range",
            Error::NotMonotone { .. } => "not-monotone",
            Error::WrapViolation { .. } => "wrap-violation",
            Error::NotNormalized { .. } => "not-normalized",
            Error::NotEndpointPreserving { .. } => "not-endpoint-preserving",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::NotCyclicallyMonotone => "not-cyclically-monotone",
            Error::IncompatibleFiberOrder { .. } => "incompatible-fiber-order",
            Error::TruncationExceeded { .. } => "truncation-exceeded",
            Error::TruncationTooLow { .. } => "truncation-too-low",
            Error::InvalidTriangulation(_) => "invalid-triangulation",
            Error::AxiomFailure(_) => "axiom-failure",
            Error::NotAssociative(..) => "not-associative",
            Error::NoIdentity => "no-identity",
            Error::InvalidPresheaf(_) => "invalid-presheaf",
            Error::InvalidMap(_) => "invalid-map",
            Error::Parse(_) => "parse",
        }
    }
}
