use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^32")]
    InvalidModulus(u64),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),

    #[error("a complex needs at least one facet")]
    EmptyFacetList,

    #[error("complexes are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),

    #[error("complete skeleton needs 1 <= d < n, got d={d}, n={n}")]
    InvalidSkeleton { d: usize, n: usize },

    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),

    #[error("ideal is not a minimal prime of the ring")]
    NotAMinimalPrime,

    #[error("ideals live in different ambient rings")]
    AmbientMismatch,

    #[error("minimal prime index {index} out of range ({count} facets)")]
    PrimeIndexOutOfRange { index: usize, count: usize },

    #[error("coefficient columns for facet {facet:?} have rank {achieved}, need {required}")]
    RankDeficient {
        facet: Vec<usize>,
        required: usize,
        achieved: usize,
    },

    #[error("generators do not form a *-reduction of the maximal ideal")]
    NotAStarReduction,

    #[error("a linear ideal needs at least one nonzero generator")]
    ZeroLinearIdeal,

    #[error("generator has a nonzero constant term, so it does not lie in the maximal ideal")]
    ConstantTerm,

    #[error("need at least {required} generators, got {actual}")]
    TooFewGenerators { required: usize, actual: usize },

    #[error("no admissible sample after {attempts} attempts (field too small?)")]
    SamplingFailed { attempts: usize },

    #[error("at least one sample is required")]
    ZeroSamples,

    #[error("no linear *-reduction with the minimal number of generators exists over GF({0})")]
    NoReductions(u64),

    #[error("enumeration needs {needed} matrices, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("operation requires a prime field")]
    RequiresPrimeField,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
