use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("parameter `{0}` occurs but is not assigned")]
    UnboundParameter(String),
    #[error("denominator vanishes at the sample point")]
    PoleAtSamplePoint,
    #[error("unknown parameter name `{0}`")]
    UnknownParameter(String),
    #[error("scalar parse error: {0}")]
    ScalarParse(String),
    #[error("term ({i},{j}) violates the declared parity of the form")]
    MixedParityTerm { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the bilinear form is degenerate")]
    DegenerateForm,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("symbolic call with free parameters is unsupported here; evaluate at a sample point")]
    ParametricUnsupported,
    #[error("parameter region admits no sample points")]
    EmptyRegion,
    #[error("bounded enumeration found fewer points than requested in the region")]
    RegionExhausted,
    #[error("no scripted certificate for entry `{0}`")]
    UnknownCertificate(String),
    #[error("scripted deduction does not follow from the constraint store: {0}")]
    StepNotImplied(String),
    #[error("expression has surviving quadratic terms in the unknowns")]
    NonAffineExpression,
    #[error("(g, omega, a, N) is not a strong polarization: {0}")]
    NotStronglyPolarized(String),
    #[error("linear map is not bijective")]
    NotBijective,
    #[error("catalog parse error: {0}")]
    ParseError(String),
    #[error("catalog schema violation: {0}")]
    SchemaViolation(String),
    #[error("unknown entry id `{0}`")]
    UnknownEntryId(String),
    #[error("entry `{0}` carries no extension data")]
    NoExtensionData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
