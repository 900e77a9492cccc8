use core::fmt;

use crate::space::Space;

/// Everything that can go wrong in the algebra and the geometry built on it.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Two operands live in different model spaces.
    SpaceMismatch { left: Space, right: Space },
    /// An operation was asked for in a space where it is not defined.
    WrongSpace { expected: Space, found: Space },
    /// A blade view was built from a multivector of the wrong grade.
    WrongGrade { expected: u32, found: Option<u32> },
    /// The input has zero norm where a normalisable element is required.
    ZeroInput,
    /// A grade-2 element of El3 violates the Plücker condition.
    NonSimpleBivector { residual: f64 },
    /// `a * reverse(a)` is not a nonzero scalar.
    NonInvertible,
    /// The point sits at the polar point of the line, so `a·P` vanishes.
    DegeneratePolar,
    /// The axis split of a bivector is not unique.
    DegenerateAxes,
    /// Triangle vertices are collinear or coincide.
    Collinear,
    /// The bivector satisfies neither `IΞ = Ξ` nor `IΞ = -Ξ`.
    NotCliffordBivector,
    /// The line does not pass through the origin `e123`.
    NotOriginLine,
    /// A parameter lies outside its documented range.
    ParameterOutOfRange { name: &'static str, value: f64 },
    /// The operation is not defined for the given grade combination.
    UnsupportedGrade { grade: u32 },
    /// A basis blade name is not known in the given space.
    UnknownBasis,
    /// A multivector is not even or does not satisfy `S reverse(S) = 1`.
    NotASpinor,
    /// The triangle has no right angle at the expected vertex.
    NotRightAngled,
    /// An element required to be incident with another is not.
    NotIncident,
    /// The operation needs a single-grade element.
    MixedGrade,
    /// Coefficient slice has the wrong length for the space.
    CoefficientCount { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpaceMismatch { left, right } => {
                write!(f, "space mismatch: {left} vs {right}")
            }
            Error::WrongSpace { expected, found } => {
                write!(f, "expected an element of {expected}, found {found}")
            }
            Error::WrongGrade { expected, found: Some(g) } => {
                write!(f, "expected grade {expected}, found grade {g}")
            }
            Error::WrongGrade { expected, found: None } => {
                write!(f, "expected grade {expected}, found a mixed-grade multivector")
            }
            Error::ZeroInput => f.write_str("zero input cannot be normalised"),
            Error::NonSimpleBivector { residual } => {
                write!(f, "bivector is not a line (plücker residual {residual:e})")
            }
            Error::NonInvertible => f.write_str("multivector is not invertible"),
            Error::DegeneratePolar => f.write_str("point coincides with the polar point of the line"),
            Error::DegenerateAxes => f.write_str("axis decomposition is not unique"),
            Error::Collinear => f.write_str("triangle vertices are collinear"),
            Error::NotCliffordBivector => f.write_str("bivector is not a clifford bivector"),
            Error::NotOriginLine => f.write_str("line does not pass through the origin"),
            Error::ParameterOutOfRange { name, value } => {
                write!(f, "parameter {name} = {value} is out of range")
            }
            Error::UnsupportedGrade { grade } => {
                write!(f, "operation is not defined for grade {grade}")
            }
            Error::UnknownBasis => f.write_str("unknown basis blade name"),
            Error::NotASpinor => f.write_str("multivector is not a spinor"),
            Error::NotRightAngled => f.write_str("triangle is not right-angled at the first vertex"),
            Error::NotIncident => f.write_str("elements are not incident"),
            Error::MixedGrade => f.write_str("operation requires a single-grade blade"),
            Error::CoefficientCount { expected, found } => {
                write!(f, "expected {expected} coefficients, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
