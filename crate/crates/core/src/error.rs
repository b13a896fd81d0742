use thiserror::Error;

/// Errors produced by the ultrametric library.
///
/// Point indices in the variants refer to positions in the space's label
/// list, not to the labels themselves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("space must contain at least one point")]
    EmptySpace,
    #[error("distance matrix is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("distance is not symmetric: d({i},{j}) != d({j},{i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("distance d({i},{j}) violates d(x,y) = 0 iff x = y")]
    BadDiagonal { i: usize, j: usize },
    #[error("strong triangle inequality violated: d({i},{j}) > max(d({i},{k}), d({k},{j}))")]
    StrongTriangleViolated { i: usize, j: usize, k: usize },
    #[error("point index {index} out of range for a space with {n} points")]
    PointOutOfRange { index: usize, n: usize },
    #[error("point set is empty")]
    EmptySet,
    #[error("point set has {0} points; at least two are required")]
    TooSmall(usize),
    #[error("the two points must be distinct")]
    SamePoint,
    #[error("weight {0} is not a nonzero value of the spectrum")]
    NotInSpectrum(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("path does not visit every point exactly once")]
    NotSpanning,
    #[error("path is not a minimum spanning path of the space")]
    NotMinimal,
    #[error("exhaustive enumeration limited to {limit} points, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("the two point sets are equal")]
    EqualSets,
    #[error("invalid weight `{0}`")]
    InvalidWeight(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
