use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial has negative-index coefficients (lowest index {lo})")]
    NonAnalytic { lo: i64 },
    #[error("point {re}{im:+}i lies outside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },
    #[error("grid of size {grid} aliases a support of width {width}")]
    Aliasing { grid: usize, width: usize },
    #[error("grid size {0} is not a power of two")]
    GridNotPowerOfTwo(usize),
    #[error("zero {re}{im:+}i is within 1e-8 of the unit circle")]
    ZeroOnBoundary { re: f64, im: f64 },
    #[error("modulus sample {index} is {value}, below the positivity floor")]
    NonpositiveModulus { index: usize, value: f64 },
    #[error("truncation degree {degree} exceeds {max} for this grid")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("node {index} has modulus {modulus}, not inside the disk")]
    NodeOnBoundary { index: usize, modulus: f64 },
    #[error("nodes {first} and {second} coincide")]
    DuplicateNodes { first: usize, second: usize },
    #[error("nodes and values differ in length ({nodes} vs {values})")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("interpolation problem is not solvable (Pick matrix minimum eigenvalue {min_eigenvalue})")]
    NotSolvable { min_eigenvalue: f64 },
    #[error("Toeplitz matrix has norm {norm}, not a contraction")]
    NotContraction { norm: f64 },
    #[error("degree budget {budget} is below the required {required}")]
    DegreeBudgetTooSmall { budget: usize, required: usize },
    #[error("subspace has no wandering vector below the safe degree")]
    DoublyInvariant,
    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(&'static str),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
