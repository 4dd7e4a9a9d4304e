//! Error types, one enum per module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("exact division failed")]
    NotDivisible,
    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliationError {
    #[error("the 1-form vanishes after saturation")]
    DegenerateForm,
    #[error("the point is not singular")]
    NotSingular,
    #[error("the singular point is not isolated")]
    NonIsolated,
    #[error("no generic shear found after {0} attempts")]
    GenericityFailure(usize),
    #[error("the line is not invariant")]
    NotInvariant,
    #[error("the singular point is degenerate")]
    Degenerate,
    #[error("the line is invariant")]
    InvariantLine,
    #[error("linear factors could not be separated: {0}")]
    IncompleteFactorization(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("input is not a homogeneous form in x, y, z: {0}")]
    BadInput(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("not a homogeneous foliation: {0}")]
    Invalid(String),
    #[error("the cone tangent has a multiple factor")]
    DegenerateInfinity,
    #[error("the line is not a simple transverse inflection line")]
    NotSimpleInflection,
    #[error("the critical point is not alone in its fiber")]
    FiberConditionFailed,
    #[error("exact division by the squared line failed")]
    NonDivisible,
    #[error("the line is not a transverse inflection line of maximal order")]
    NotMaximalInflection,
    #[error("criterion requires degree 3, got {0}")]
    WrongDegree(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("foliation of degree zero has no dual web")]
    DegreeZero,
    #[error("leading fiber coefficient vanishes in chart {0}; try another chart")]
    DegreeDrop(u8),
    #[error("the p-resultant vanishes identically")]
    NonReducedWeb,
    #[error("expected a 3-web, got a {0}-web")]
    NotACubicWeb(usize),
    #[error("resultant is not divisible by the leading coefficient")]
    NonDivisible,
    #[error("invalid web: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Foliation(#[from] FoliationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("differentials must appear linearly (at {pos})")]
    NonLinearDifferential { pos: usize },
}
