//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the library.
///
/// The variants are grouped roughly by the layer that raises them; the
/// same variant is reused wherever the same condition occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // Scalar arithmetic.
    ZeroDenominator,
    DivisionByZero,
    NotPrime,

    // Polynomial arithmetic.
    ZeroPolynomial,
    BothZero,
    ConstantPolynomial,
    InseparableInput,

    // Factorization over Fp.
    NotSquarefree,
    NotMonic,
    PreconditionViolated(String),

    // Factorization over Q.
    NotCoprime,
    TooManyModularFactors(usize),

    // Number fields and splitting fields.
    FieldMismatch,
    NotIrreducible,
    NotSeparable,
    DegreeCapExceeded(usize),
    InternalInconsistency(String),

    // Conjugate-product verification.
    EmptySet,
    IndexOutOfRange(usize),
    DegenerateDivisor,
    NotInBaseField,
    HypothesisViolated(String),
    CapExceeded(String),

    // Norm theorem over monogenic rings.
    ZeroDivisor,
    DoesNotDivide,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotPrime => write!(f, "modulus is not prime"),
            Error::ZeroPolynomial => write!(f, "polynomial is zero"),
            Error::BothZero => write!(f, "gcd of two zero polynomials"),
            Error::ConstantPolynomial => write!(f, "polynomial is constant"),
            Error::InseparableInput => {
                write!(f, "inseparable input: derivative vanishes in characteristic p")
            }
            Error::NotSquarefree => write!(f, "polynomial is not squarefree"),
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotCoprime => write!(f, "factors are not pairwise coprime"),
            Error::TooManyModularFactors(n) => {
                write!(f, "too many modular factors for recombination: {n}")
            }
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::NotIrreducible => write!(f, "polynomial is not irreducible"),
            Error::NotSeparable => write!(f, "polynomial is not separable"),
            Error::DegreeCapExceeded(d) => write!(f, "degree cap exceeded: {d}"),
            Error::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::EmptySet => write!(f, "root index set is empty"),
            Error::IndexOutOfRange(i) => write!(f, "root index out of range: {i}"),
            Error::DegenerateDivisor => write!(f, "divisor has degree zero"),
            Error::NotInBaseField => {
                write!(f, "coefficient failed to reduce to the base field (internal bug)")
            }
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::CapExceeded(msg) => write!(f, "cap exceeded: {msg}"),
            Error::ZeroDivisor => write!(f, "divisor element is zero"),
            Error::DoesNotDivide => write!(f, "element does not divide in the ring"),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
