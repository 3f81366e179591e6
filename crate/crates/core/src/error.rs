use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// Absence of a solution, a non-factoring morphism or a failed decision are
/// values, not errors; the variants here describe malformed input or
/// preconditions that the caller did not meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    FieldMismatch { expected: u32, found: u32 },
    ShapeMismatch { context: String },
    UnknownVertex(String),
    UnknownArrow(String),
    DuplicateLabel(String),
    InvalidRelation { relation: String, reason: String },
    InfiniteDimensional { cap: usize },
    InvalidRepresentation { reason: String },
    InvalidMorphism { reason: String },
    AlgebraMismatch,
    TargetMismatch,
    SourceMismatch,
    NotOpposite,
    EmptySubcategory,
    NotProjectiveGenerator { index: usize },
    NotStableEpi,
    NotStrongMono,
    NotMono,
    NotEpi,
    SourceNotInSubcategory,
    NotApplicable { reason: String },
    BudgetExceeded { what: String, limit: usize },
    UnknownScenario(String),
    /// Two routes for the same decision disagreed; always a bug.
    RouteDisagreement { op: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime"),
            Error::FieldMismatch { expected, found } => {
                write!(f, "field mismatch: expected F_{expected}, found F_{found}")
            }
            Error::ShapeMismatch { context } => write!(f, "shape mismatch: {context}"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            Error::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            Error::DuplicateLabel(l) => write!(f, "duplicate label `{l}`"),
            Error::InvalidRelation { relation, reason } => {
                write!(f, "invalid relation `{relation}`: {reason}")
            }
            Error::InfiniteDimensional { cap } => {
                write!(f, "a path longer than the cap {cap} survives the relations")
            }
            Error::InvalidRepresentation { reason } => write!(f, "invalid representation: {reason}"),
            Error::InvalidMorphism { reason } => write!(f, "invalid morphism: {reason}"),
            Error::AlgebraMismatch => f.write_str("objects live over different algebras"),
            Error::TargetMismatch => f.write_str("morphisms do not share a target"),
            Error::SourceMismatch => f.write_str("morphisms do not share a source"),
            Error::NotOpposite => f.write_str("algebra is not the opposite of the source algebra"),
            Error::EmptySubcategory => f.write_str("subcategory needs at least one generator"),
            Error::NotProjectiveGenerator { index } => {
                write!(f, "generator #{index} is not projective")
            }
            Error::NotStableEpi => f.write_str("morphism is not an epimorphism in the stable category"),
            Error::NotStrongMono => {
                f.write_str("morphism is not a strong monomorphism in the stable category")
            }
            Error::NotMono => f.write_str("morphism is not a monomorphism"),
            Error::NotEpi => f.write_str("morphism is not an epimorphism"),
            Error::SourceNotInSubcategory => f.write_str("source is not in the subcategory"),
            Error::NotApplicable { reason } => write!(f, "not applicable: {reason}"),
            Error::BudgetExceeded { what, limit } => write!(f, "budget exceeded: {what} (limit {limit})"),
            Error::UnknownScenario(s) => write!(f, "unknown scenario `{s}`"),
            Error::RouteDisagreement { op } => {
                write!(f, "internal inconsistency: routes for `{op}` disagree")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn shape(context: impl Into<String>) -> Error {
    Error::ShapeMismatch { context: context.into() }
}
