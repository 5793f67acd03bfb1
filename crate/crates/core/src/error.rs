use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type: leading principal minor of order {order} is {value}")]
    NotFiniteType { order: usize, value: String },

    #[error("unknown Dynkin type label `{0}`")]
    UnknownType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("Weyl group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("root set is not symmetric: {0:?} has no negative in the set")]
    NotSymmetric(Vec<i64>),

    #[error("root set is not closed: {a:?} + {b:?} is a root outside the set")]
    NotClosed { a: Vec<i64>, b: Vec<i64> },

    #[error("Levi root set is not standard parabolic for the fixed simple system (|W| = {order} but |W1|*|W^1| = {product})")]
    IncompatibleLevi { order: usize, product: usize },

    #[error("element with reduced word {0:?} is not in W^1")]
    NotInCosetSet(Vec<usize>),

    #[error("elliptic element is not dominant (simple root {index} takes value {value}); use dominant_form first")]
    NotDominant { index: usize, value: String },

    #[error("the zero matrix has no normalizing pair")]
    ZeroMatrix,

    #[error("identity check failed: {0}")]
    IdentityFailure(String),

    #[error("malformed rational `{0}`")]
    BadRational(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::IdentityFailure(_) => 4,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
