use thiserror::Error;

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("polynomial is not in the ideal (remainder {remainder})")]
    NotMember { remainder: String },

    #[error("curve is not ACM: {generators} minimal generators but first syzygies {syzygy_degrees:?}")]
    NotAcm { generators: usize, generator_degrees: Vec<usize>, syzygy_degrees: Vec<usize> },

    #[error("surface is singular")]
    Singular,

    #[error("no smooth surface found after {attempts} attempts")]
    SmoothnessNotAchieved { attempts: usize },

    #[error("class is not determined by ideal data: (I_C + J_S) has corank {corank} in degree {degree}")]
    IndeterminateClass { corank: usize, degree: usize },

    #[error("surfaces intersect improperly")]
    ImproperIntersection,

    #[error("unsupported curve: {0}")]
    UnsupportedCurve(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
