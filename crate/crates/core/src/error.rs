use thiserror::Error;

/// Structural and precondition failures.
///
/// Axiom violations are not errors: they are reported as data in a
/// `ValidationReport` or a suite result.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture syntax: {0}")]
    FixtureSyntax(String),
    #[error("{what} has {size} elements, above the cap of {cap}")]
    SizeCap { what: String, size: usize, cap: usize },
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("operands live in different modules")]
    AmbientMismatch,
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("{0} is not a submodule")]
    NotASubmodule(String),
    #[error("element {0} is not in the intersection of the two factors")]
    NotInIntersection(usize),
    #[error("tuples are not exchange equivalent")]
    NotEquivalent,
    #[error("invalid index partition: {0}")]
    InvalidPartition(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("ring precondition failed: {0}")]
    RingPrecondition(String),
    #[error("relation is not antisymmetric for this D")]
    NotDOrdered,
    #[error("set is not stable under D")]
    NotStable,
    #[error("set is not closed under addition")]
    NotAddClosed,
    #[error("monoid is not bipotent: {0}")]
    NotBipotent(String),
    #[error("not a retraction: {0}")]
    NotARetraction(String),
    #[error("fiber over zero contains a nonzero element")]
    NonzeroFiberOverZero,
    #[error("D-bar minus zero is not order-convex in X")]
    ConvexityViolation,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
