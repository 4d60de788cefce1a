use thiserror::Error;

use crate::laurent::ExponentVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),

    #[error("no exact quotient exists in the Laurent ring")]
    DivisionFailure,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("wall substitution x{}=-x{} needs distinct variables", .0 + 1, .1 + 1)]
    DegenerateWall(usize, usize),

    #[error("fractional exponent at x{} makes the substitution x{}=-x{} undefined", .var + 1, .i + 1, .j + 1)]
    FractionalWallExponent { var: usize, i: usize, j: usize },

    #[error("monomial with exponents {0} lies in no single coset a+Z^n")]
    MixedCoset(ExponentVector),

    #[error("coset class with denominator {den} exceeds the configured bound {bound}")]
    DenominatorBound { den: i64, bound: i64 },

    #[error("fractional exponents are outside the integer lattice; use the super-ring tests instead")]
    FractionalExponents,

    #[error("not a permutation of {0} points")]
    InvalidPermutation(usize),

    #[error("{0:?} is not weakly decreasing")]
    NotDecreasing(Vec<i64>),

    #[error("{0:?} is not a queer-dominant weight (repeated parts must be zero)")]
    NotQueerDominant(Vec<i64>),

    #[error("weight {0} is atypical (two parts sum to zero)")]
    Atypical(String),

    #[error("weight {0} is not a strictly decreasing vector in a single coset a+Z^n")]
    InvalidTypicalWeight(String),

    #[error("weight has {found} parts, expected {expected}")]
    WeightLength { expected: usize, found: usize },

    #[error("E(lambda) = {euler} is not {scalar} * p_lambda = {expected}")]
    ProportionalityFailure {
        euler: String,
        expected: String,
        scalar: String,
    },

    #[error("not in J_n: {0}")]
    NotInJn(String),

    #[error("evaluation left residual t-dependence: {0}")]
    ResidualT(String),

    #[error("element is not in the span of the P-basis (degree {degree} component)")]
    NotInSpan { degree: String },

    #[error("not in ring {ring}: {reason}")]
    NotInRing { ring: String, reason: String },

    #[error("not in the kernel of ev: {0}")]
    NotInKernel(String),

    #[error("ev needs at least 2 variables, got {0}")]
    TooFewVariables(usize),

    #[error("morphism words are not composable: {0}")]
    NotComposable(String),
}
