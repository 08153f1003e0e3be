use thiserror::Error;

/// Errors raised by the library. Variant names double as the diagnostic
/// names printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an elementary polygon cannot have both length and height infinite")]
    BothInfinite,
    #[error("elementary polygons need length and height >= 1")]
    ZeroDimension,
    #[error("polygon or polyhedron does not have finite volume")]
    NotFiniteVolume,
    #[error("support is empty")]
    EmptySupport,
    #[error("indeterminate form 0 * infinity")]
    IndeterminateForm,
    #[error("the product is only defined when at most one factor is infinite")]
    UnsupportedInfiniteCombination,
    #[error("dimension {0} exceeds the supported maximum of 4")]
    DimensionTooLarge(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("polyhedron has infinite covolume")]
    InfiniteVolume,
    #[error("mixed volume index does not match the operands")]
    IndexMismatch,
    #[error("multiplicity {0} is not an integer")]
    NonIntegralMultiplicity(String),
    #[error("colength differences did not stabilize; raise kmax")]
    NonPolynomialGrowth,
    #[error("series precision is insufficient{}", .0.map(|p| format!(" (need at least {p})")).unwrap_or_default())]
    PrecisionInsufficient(Option<u64>),
    #[error("segment is not a compact edge of the Newton polygon")]
    NotAnEdge,
    #[error("polynomial is not unitary in the eliminated variable")]
    NotUnitary,
    #[error("singularity or intersection is not isolated")]
    NotIsolated,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("field tower degree {degree} exceeds the bound {bound}")]
    ExtensionTooDeep { degree: usize, bound: usize },
    #[error("function vanishes identically on the branch")]
    IdenticallyZero,
    #[error("polynomial is divisible by y")]
    DivisibleByY,
    #[error("gcd chain of the generators is invalid")]
    GcdChainInvalid,
    #[error("generators are not a minimal system")]
    NotMinimal,
    #[error("generators do not form the semigroup of a plane branch")]
    NotRealizable,
    #[error("polygon does not have the shape of a branch jacobian polygon")]
    NotMerleShaped,
    #[error("genericity certificate failed: {0} vs {1}")]
    GenericityFailure(String, String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("polygon with two infinite edges cannot be rendered")]
    Unrenderable,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// The variant name, used on the diagnostic stream of the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BothInfinite => "BothInfinite",
            Error::ZeroDimension => "ZeroDimension",
            Error::NotFiniteVolume => "NotFiniteVolume",
            Error::EmptySupport => "EmptySupport",
            Error::IndeterminateForm => "IndeterminateForm",
            Error::UnsupportedInfiniteCombination => "UnsupportedInfiniteCombination",
            Error::DimensionTooLarge(_) => "DimensionTooLarge",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::InfiniteVolume => "InfiniteVolume",
            Error::IndexMismatch => "IndexMismatch",
            Error::NonIntegralMultiplicity(_) => "NonIntegralMultiplicity",
            Error::NonPolynomialGrowth => "NonPolynomialGrowth",
            Error::PrecisionInsufficient(_) => "PrecisionInsufficient",
            Error::NotAnEdge => "NotAnEdge",
            Error::NotUnitary => "NotUnitary",
            Error::NotIsolated => "NotIsolated",
            Error::NotSquareFree => "NotSquareFree",
            Error::ExtensionTooDeep { .. } => "ExtensionTooDeep",
            Error::IdenticallyZero => "IdenticallyZero",
            Error::DivisibleByY => "DivisibleByY",
            Error::GcdChainInvalid => "GcdChainInvalid",
            Error::NotMinimal => "NotMinimal",
            Error::NotRealizable => "NotRealizable",
            Error::NotMerleShaped => "NotMerleShaped",
            Error::GenericityFailure(..) => "GenericityFailure",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::Unrenderable => "Unrenderable",
            Error::DivisionByZero => "DivisionByZero",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for errors caused by malformed textual input rather than by the
    /// mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
