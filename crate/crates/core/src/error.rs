use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vectors or isometries belong to different lattices")]
    LatticeMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Gram matrix is not square")]
    NotSquare,

    #[error("Gram matrix is not symmetric")]
    NotSymmetric,

    #[error("Gram matrix is degenerate (determinant 0)")]
    Degenerate,

    #[error("lattice has rank {found}, expected rank {expected}")]
    WrongRank { expected: usize, found: usize },

    #[error("lattice has signature ({p}, {n}), expected ({expected_p}, {expected_n})")]
    WrongSignature {
        p: usize,
        n: usize,
        expected_p: usize,
        expected_n: usize,
    },

    #[error("lattice is not even")]
    NotEven,

    #[error("reflection root must have square -2, got {norm}")]
    InvalidRoot { norm: BigInt },

    #[error("anti-involution axis must have square 2, got {norm}")]
    InvalidAxis { norm: BigInt },

    #[error("matrix does not preserve the Gram pairing")]
    NotIsometry,

    #[error("basis change is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },

    #[error("basis change does not yield an integral matrix")]
    NotIntegral,

    #[error("polarization must have positive square, got {norm}")]
    InvalidPolarization { norm: BigInt },

    #[error("class must have positive square, got {norm}")]
    NonPositiveSquare { norm: BigInt },

    #[error("class {class} is not nef")]
    NotNef { class: String },

    #[error("class {class} is not ample")]
    NotAmple { class: String },

    #[error("linear system of {class} is not base-point free")]
    NotFree { class: String },

    #[error("effective cone inconclusive: no extremal class certified on the {side} side up to degree {bound}")]
    Inconclusive { side: &'static str, bound: u32 },

    #[error("no effective curve classes found up to degree {bound}")]
    NoEffectiveClasses { bound: u32 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("polarization has not been certified very ample without lines")]
    UncertifiedPolarization,

    #[error("cone for factor {factor} is not a certified nef cone of that factor")]
    UncertifiedCone { factor: usize },

    #[error("ray set is not stable under group element {index}")]
    StabilityViolation { index: usize },

    #[error("orbit classes {first} and {second} are proportional")]
    ProportionalityAnomaly { first: usize, second: usize },

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("empty factor list")]
    EmptyProduct,
}
