use thiserror::Error;

/// Errors raised by field, polynomial, factorization and code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    CompositeP(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{s} exceeds the supported bound of {bound} elements")]
    FieldTooLarge { p: u64, s: u32, bound: u64 },
    #[error("modulus is malformed: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over Z_{0}")]
    ReducibleModulus(u64),
    #[error("element encoding {0} is out of range for this field")]
    InvalidElement(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation is undefined at the zero element")]
    ZeroElement,
    #[error("no element of order {0} exists in this field")]
    NoSuchRoot(u64),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("{m} is divisible by the characteristic {p}")]
    NotCoprimeToCharacteristic { m: u64, p: u64 },
    #[error("binomial constant must be nonzero")]
    ZeroConstant,
    #[error("no primitive {0}-th root of unity exists in this field")]
    NoSuchRootOfUnity(u64),
    #[error("odd part m = {0} must be odd")]
    EvenM(u64),
    #[error("exponent vector base does not match the canonical factorization")]
    BadBase,
    #[error("exponent {exp} outside [0, {max}]")]
    ExponentRange { exp: u64, max: u64 },
    #[error("generator does not divide x^n - lambda")]
    NotADivisor,
    #[error("code has dimension zero")]
    ZeroDimension,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("enumeration of {size} items exceeds the bound {bound}")]
    TooLarge { size: String, bound: u64 },
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
