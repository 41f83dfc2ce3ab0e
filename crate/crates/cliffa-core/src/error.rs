//! Error type shared by all modules.

use core::fmt;

/// Errors surfaced by the library. All are deterministic consequences of the
/// input; nothing here is a numeric tolerance failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The squarefree part of an integer could not be certified within the
    /// trial-division bound.
    FactorizationLimit,
    /// Inverse of a singular matrix was requested.
    Singular,
    /// Matrix shapes are inconsistent for the requested operation.
    ShapeMismatch,
    /// A bilinear form matrix is degenerate.
    DegenerateForm,
    /// The quotient engine exhausted its degree, slack or dimension caps
    /// before the basis stabilized.
    ResourceCap {
        degree_cap: usize,
        slack_cap: usize,
        dim_cap: usize,
    },
    /// An element exceeds the stabilized working degree of a quotient.
    DegreeOverflow { degree: usize, max: usize },
    /// The even part was requested for a quotient whose ideal is not
    /// parity-graded.
    NotGraded,
    /// No non-degenerate solution of B·A = Bᵀ was found.
    NoNondegenerateSolution,
    /// A quaternion algebra parameter is zero.
    ZeroParameter,
    /// An algebra element is not invertible.
    NotInvertible,
    /// The scan over skew-symmetric elements found no invertible one within
    /// its budget.
    NoInvertibleSkew,
    /// An operation required a specific dimension.
    WrongDimension { expected: usize, found: usize },
    /// A commutative algebra was required.
    NotCommutative,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FactorizationLimit => {
                write!(f, "squarefree part not certifiable within trial-division bound")
            }
            Error::Singular => write!(f, "matrix is singular"),
            Error::ShapeMismatch => write!(f, "matrix shapes are inconsistent"),
            Error::DegenerateForm => write!(f, "bilinear form is degenerate"),
            Error::ResourceCap {
                degree_cap,
                slack_cap,
                dim_cap,
            } => write!(
                f,
                "quotient did not stabilize within caps (degree {degree_cap}, slack {slack_cap}, dim {dim_cap})"
            ),
            Error::DegreeOverflow { degree, max } => {
                write!(f, "element degree {degree} exceeds stabilized degree {max}")
            }
            Error::NotGraded => write!(f, "ideal is not parity-graded"),
            Error::NoNondegenerateSolution => {
                write!(f, "no non-degenerate form with the requested asymmetry")
            }
            Error::ZeroParameter => write!(f, "quaternion parameter must be nonzero"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::NoInvertibleSkew => {
                write!(f, "no invertible skew-symmetric element found within scan budget")
            }
            Error::WrongDimension { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::NotCommutative => write!(f, "algebra is not commutative"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
