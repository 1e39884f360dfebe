//! Error type shared by every module of the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Everything that can go wrong across the library.
///
/// Variants split into two classes, which the CLI maps onto exit codes:
/// malformed input (`is_input_error`) and violated operation preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Expression could not be parsed; `offset` is a byte offset into the input.
    Syntax { offset: usize, msg: String },
    /// Identifier not in the declared variable list.
    UnknownVariable { offset: usize, name: String },
    /// `^` was not followed by a nonnegative integer literal.
    NonIntegerExponent { offset: usize },
    /// Field specification rejected (non-prime p, reducible modulus, size bounds).
    InvalidField(String),
    /// Malformed data that fits no more specific variant.
    InvalidInput(String),
    /// Operands belong to different coefficient rings.
    RingMismatch,
    /// Pfaffian input is not antisymmetric with zero diagonal.
    NotAntisymmetric,
    NotSquare,
    /// Integer polynomial division left a remainder; names the first bad monomial.
    NotDivisible { monomial: String },
    DimensionMismatch,
    NotRegularIsotropic,
    NotIsotropic,
    ZeroForm,
    FormMismatch,
    SizeMismatch,
    /// Subspace not contained in the hyperplane.
    NotContained,
    /// Cone vertex subspace not inside the bilinear radical.
    NotInRadical,
    /// Isotropic subspace does not contain the cone vertex.
    NotContaining,
    /// A coordinate-spanned subspace was required.
    NotCoordinate,
    ZeroPoint,
    /// Fiber form vanishes identically at the point.
    NonPrimitiveFiber,
    OddRank,
    /// Neither sign makes the discriminant division exact (implementation bug).
    NoValidSign,
    NotIsotropicEverywhere,
    /// Bundle reduction found no pairing that is a nonzero constant.
    NoUnitPivot,
    NotCubic,
    PlaneNotContained { monomials: Vec<String> },
    SecondPlaneNotContained { monomials: Vec<String> },
    /// Enumeration guard tripped; carries the candidate count.
    TooLarge { candidates: u128 },
    NotSmoothEvenMaximal,
    WrongCorank,
    WrongShape,
    /// Operation needs a finite field.
    FieldNotFinite,
}

impl Error {
    /// True for errors caused by malformed input rather than a violated
    /// operation precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::NonIntegerExponent { .. }
                | Error::InvalidField(_)
                | Error::InvalidInput(_)
                | Error::NotCubic
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { offset, msg } => write!(f, "syntax error at byte {offset}: {msg}"),
            Error::UnknownVariable { offset, name } => {
                write!(f, "unknown variable `{name}` at byte {offset}")
            }
            Error::NonIntegerExponent { offset } => {
                write!(f, "exponent at byte {offset} is not a nonnegative integer literal")
            }
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::RingMismatch => write!(f, "operands have mismatched coefficient rings"),
            Error::NotAntisymmetric => write!(f, "matrix is not antisymmetric with zero diagonal"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotDivisible { monomial } => {
                write!(f, "coefficient of monomial {monomial} is not divisible")
            }
            Error::DimensionMismatch => write!(f, "ambient dimensions do not match"),
            Error::NotRegularIsotropic => write!(f, "subspace is not regular isotropic"),
            Error::NotIsotropic => write!(f, "subspace is not isotropic"),
            Error::ZeroForm => write!(f, "quadratic form is identically zero"),
            Error::FormMismatch => write!(f, "operands are built over different quadratic forms"),
            Error::SizeMismatch => write!(f, "matrix sizes do not match"),
            Error::NotContained => write!(f, "subspace is not contained in the hyperplane"),
            Error::NotInRadical => write!(f, "subspace is not contained in the bilinear radical"),
            Error::NotContaining => write!(f, "isotropic subspace does not contain the vertex"),
            Error::NotCoordinate => write!(f, "a coordinate-spanned subspace is required"),
            Error::ZeroPoint => write!(f, "point has no nonzero coordinate"),
            Error::NonPrimitiveFiber => write!(f, "fiber form is identically zero at the point"),
            Error::OddRank => write!(f, "fiber rank must be even"),
            Error::NoValidSign => write!(f, "no sign makes the discriminant division exact"),
            Error::NotIsotropicEverywhere => {
                write!(f, "subspace is not isotropic in every fiber")
            }
            Error::NoUnitPivot => write!(f, "no pivot with constant unit pairing available"),
            Error::NotCubic => write!(f, "polynomial is not a homogeneous cubic in six variables"),
            Error::PlaneNotContained { monomials } => {
                write!(f, "plane V(y) is not contained: offending monomials {monomials:?}")
            }
            Error::SecondPlaneNotContained { monomials } => {
                write!(f, "plane V(x) is not contained: offending monomials {monomials:?}")
            }
            Error::TooLarge { candidates } => {
                write!(f, "enumeration too large: {candidates} candidate subspaces")
            }
            Error::NotSmoothEvenMaximal => write!(
                f,
                "expected maximal isotropics on a smooth even-dimensional quadric"
            ),
            Error::WrongCorank => write!(f, "quadric does not have the required corank"),
            Error::WrongShape => write!(f, "quadric surface does not have the required shape"),
            Error::FieldNotFinite => write!(f, "operation requires a finite field"),
        }
    }
}
