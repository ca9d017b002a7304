use crate::lattice::{Int, Point2};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("SINGULAR_MATRIX: determinant is zero")]
    SingularMatrix,
    #[error("DEGENERATE_HULL: points do not span the plane")]
    DegenerateHull,
    #[error("ORIGIN_NOT_INTERIOR: the origin is not an interior point")]
    OriginNotInterior,
    #[error("NONPRIMITIVE_GENERATOR: {0} is not primitive")]
    NonprimitiveGenerator(Point2),
    #[error("COLLINEAR_GENERATORS: {0} and {1} are linearly dependent")]
    CollinearGenerators(Point2, Point2),
    #[error("NOT_COPRIME: gcd({0}, {1}) != 1")]
    NotCoprime(Int, Int),
    #[error("BAD_FRACTION: {0}/{1}")]
    BadFraction(Int, Int),
    #[error("NOT_LDP: {0}")]
    NotLdp(String),
    #[error("NOT_L_REFLEXIVE: local indices {0:?}")]
    NotLReflexive(Vec<Int>),
    #[error("ELL_IS_ONE: requires index greater than one")]
    EllIsOne,
    #[error("NO_DECOMPOSITION: no (j, k) reproduces the polygon")]
    NoDecomposition,
    #[error("RESTRICTION_VIOLATED: {0}")]
    RestrictionViolated(String),
    #[error("PARSE_ERROR: {0}")]
    Parse(String),
    #[error("INTERNAL: {0}")]
    Internal(String),
}

impl Error {
    /// Stable upper-case name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SingularMatrix => "SINGULAR_MATRIX",
            Error::DegenerateHull => "DEGENERATE_HULL",
            Error::OriginNotInterior => "ORIGIN_NOT_INTERIOR",
            Error::NonprimitiveGenerator(_) => "NONPRIMITIVE_GENERATOR",
            Error::CollinearGenerators(..) => "COLLINEAR_GENERATORS",
            Error::NotCoprime(..) => "NOT_COPRIME",
            Error::BadFraction(..) => "BAD_FRACTION",
            Error::NotLdp(_) => "NOT_LDP",
            Error::NotLReflexive(_) => "NOT_L_REFLEXIVE",
            Error::EllIsOne => "ELL_IS_ONE",
            Error::NoDecomposition => "NO_DECOMPOSITION",
            Error::RestrictionViolated(_) => "RESTRICTION_VIOLATED",
            Error::Parse(_) => "PARSE_ERROR",
            Error::Internal(_) => "INTERNAL",
        }
    }
}
