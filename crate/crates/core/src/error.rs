use thiserror::Error;

/// Errors raised by construction, validation and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distance matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("distance matrix has nonzero diagonal entry d[{0}][{0}] = {1}")]
    NonzeroDiagonal(usize, f64),

    #[error("negative or NaN distance d[{i}][{j}] = {value}")]
    NegativeDistance { i: usize, j: usize, value: f64 },

    #[error("asymmetric distance: d[{i}][{j}] = {dij} but d[{j}][{i}] = {dji}")]
    Asymmetry { i: usize, j: usize, dij: f64, dji: f64 },

    #[error("triangle inequality violated: d[{i}][{k}] > d[{i}][{j}] + d[{j}][{k}] for ({i},{j},{k})")]
    TriangleViolation { i: usize, j: usize, k: usize },

    #[error("coordinates disagree with distances at ({i},{j}): matrix {matrix}, euclidean {euclidean}")]
    CoordMismatch { i: usize, j: usize, matrix: f64, euclidean: f64 },

    #[error("coordinate list has {got} entries, expected {expected}")]
    CoordCount { got: usize, expected: usize },

    #[error("point index {index} out of range for a universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("simplex has no vertices")]
    EmptySimplex,

    #[error("simplex vertices must be strictly increasing: {0:?}")]
    UnsortedSimplex(Vec<usize>),

    #[error("weight {value} at index {index} is negative or not finite")]
    InvalidWeight { index: usize, value: f64 },

    #[error("measure has empty support")]
    EmptySupport,

    #[error("dimension mismatch: {what} has {got} entries, expected {expected}")]
    DimensionMismatch { what: &'static str, got: usize, expected: usize },

    #[error("exponent p must be positive, got {0}")]
    NonPositiveP(f64),

    #[error("Dowker dissimilarity entry ({x},{y}) = {value} is negative or NaN")]
    InvalidDissimilarity { x: usize, y: usize, value: f64 },

    #[error("set bifiltration is not order preserving at simplex {simplex:?}, r = {r}")]
    NotOrderPreserving { simplex: Vec<usize>, r: f64 },

    #[error("Dowker condition fails: f({simplex:?}, {r}) > 0 but the common ball is empty")]
    DowkerConditionViolated { simplex: Vec<usize>, r: f64 },

    #[error("planar construction needs coordinates for every point")]
    MissingCoordinates,

    #[error("degenerate planar configuration: points {i} and {j} are {distance} apart, below the geometric tolerance")]
    DegenerateConfiguration { i: usize, j: usize, distance: f64 },

    #[error("path is not monotone at position {0}")]
    NonMonotonePath(usize),

    #[error("not an inclusion: simplex {0:?} of the subcomplex is missing from the larger complex")]
    NotAnInclusion(Vec<usize>),

    #[error("staircase steps must have strictly increasing radii and masses")]
    InvalidStaircase,

    #[error("combined support has {size} points, above the exact-computation cap of {cap}; use a Prohorov check with a candidate epsilon instead")]
    SupportTooLarge { size: usize, cap: usize },

    #[error("measures live on different spaces ({0} vs {1} points)")]
    DifferentSpaces(usize, usize),

    #[error("target set for nearest neighbor projection is empty")]
    EmptyTarget,

    #[error("embedding is not distance preserving at ({a},{b}) of space {space}")]
    NotDistancePreserving { space: usize, a: usize, b: usize },

    #[error("forward shift {0}")]
    InvalidShift(String),

    #[error("unsupported dimension {degree}: complex is capped at dimension {dim_cap}")]
    UnsupportedDimension { degree: usize, dim_cap: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
