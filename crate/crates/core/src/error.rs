use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("interpolation needs at least one point")]
    EmptyInterpolation,

    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(i64),

    #[error("{what}: size {size} exceeds the bound of {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error(
        "exhaustive scan up to n = {requested} refused: the supported bound is {bound} \
         (isomorphism classes: 183231 at n = 9, 46749427 at n = 11, weeks of compute)"
    )]
    ScanTooLarge { requested: usize, bound: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("not an Ehrhart polynomial of a lattice polytope: {0}")]
    NotEhrhart(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn bound(what: &'static str, size: usize, bound: usize) -> Self {
        Error::BoundExceeded { what, size, bound }
    }
}
