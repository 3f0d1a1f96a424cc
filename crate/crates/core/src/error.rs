use thiserror::Error;

use crate::polygon::Diagonal;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polygon size {0} is below the minimum of 4")]
    PolygonTooSmall(usize),
    #[error("polygon size {0} exceeds the supported maximum")]
    PolygonTooLarge(usize),
    #[error("({a},{b}) is not a diagonal of the {n}-gon")]
    NotADiagonal { n: usize, a: u32, b: u32 },
    #[error("diagonal {0} appears twice")]
    DuplicateDiagonal(Diagonal),
    #[error("diagonals {0} and {1} cross")]
    Crossing(Diagonal, Diagonal),
    #[error("the empty dissection has no support class")]
    EmptyDissection,
    #[error("diagonal count {d} out of range for the {n}-gon (need 0 <= d <= n-3)")]
    DiagonalCountOutOfRange { n: usize, d: usize },
    #[error("index d = {d} out of range for n = {n}")]
    BettiIndexOutOfRange { n: usize, d: usize },
    #[error("n = {n} outside the supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
    #[error("vertex set {0:#b} is not a subset of 1..=n")]
    LabelOutOfRange(u32),
    #[error("vertex set {0:#b} is the whole polygon; a proper subset is required")]
    NotProperSubset(u32),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("orientation propagation failed: {0}")]
    Orientation(String),
    #[error("boundary of boundary is nonzero in dimension {dim}")]
    BoundarySquared { dim: isize },
    #[error("Betti computations disagree at (d, j) = {cells:?}")]
    MethodMismatch { cells: Vec<(usize, usize)> },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidShape(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape has {cells} cells, above the enumeration cap of {cap}")]
    EnumerationCap { cells: usize, cap: usize },
    #[error("tableau does not belong to the family {0}")]
    FamilyMismatch(String),
    #[error("involution invariant violated: {0}")]
    Involution(String),
    #[error("face {0} is out of range")]
    FaceOutOfRange(usize),
}
