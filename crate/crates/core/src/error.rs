use thiserror::Error;

/// Errors raised by the library. Every constructor validates eagerly, so an
/// `Ok` value is always internally consistent.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,

    #[error("not a permutation of 1..={size}: {images:?}")]
    NotAPermutation { images: Vec<usize>, size: usize },

    #[error("permutation size {size} exceeds the supported maximum of {max}")]
    PermutationTooLarge { size: usize, max: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid dimension vector: {0}")]
    InvalidDimensionVector(String),

    #[error("{what}: bound exceeded (limit {limit})")]
    BoundExceeded { what: String, limit: usize },

    #[error("permutation is not a minimal coset representative")]
    NotMinimalRepresentative,

    #[error("permutation is not fixed by the involution")]
    NotIotaFixed,

    #[error("{0} is not a supported prime")]
    UnsupportedPrime(u64),

    #[error("residue {value} is not reduced modulo {p}")]
    ResidueOutOfRange { value: u64, p: u8 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("fields differ: p = {left} vs p = {right}")]
    FieldMismatch { left: u8, right: u8 },

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("torus element has a zero entry at position {0}")]
    NonInvertibleTorusEntry(usize),

    #[error("type C setting requires {0}")]
    SymplecticSetting(String),

    #[error("invalid collection: {0}")]
    InvalidCollection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
