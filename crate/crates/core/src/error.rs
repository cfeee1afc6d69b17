use thiserror::Error;

/// Failures of the series arithmetic layer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient sequence is empty")]
    Empty,
    #[error("modulus {0} is not supported (residue backend requires m < 2^63)")]
    ModulusTooLarge(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("cannot reduce a series over Z/{from} to Z/{to}")]
    IncompatibleModulus { from: u64, to: u64 },
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),
    #[error("residue {residue} out of range for dissection by {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
    #[error("dissection/substitution step must be >= 1")]
    ZeroStep,
    #[error("series of order {order} is too short for offset {needed}")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("cannot divide by q^{shift}: coefficient of q^{exponent} is {value}")]
    ShiftNonZero {
        shift: usize,
        exponent: usize,
        value: String,
    },
    #[error("product (a; b)_inf with a = {0} does not converge formally")]
    DivergentProduct(String),
    #[error("theta function f({a}, {b}) is degenerate: ab has no positive power of q")]
    DegenerateTheta { a: String, b: String },
    #[error("division by {divisor} is not exact at q^{exponent}")]
    InexactDivision { divisor: i64, exponent: usize },
}
