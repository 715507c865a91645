use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator or exponent list")]
    Empty,
    #[error("zero is not allowed in a generator or exponent list")]
    ZeroEntry,
    #[error("gcd of {0:?} is {1}, not 1")]
    GcdNotOne(Vec<u32>, u32),
    #[error("exponents must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("canonical model undefined at genus {0}")]
    GenusTooSmall(u32),
    #[error("genus {genus} exceeds the enumeration cap {cap}")]
    GenusCap { genus: u32, cap: u32 },
    #[error("the point at infinity is singular (delta_Q = {0})")]
    SingularAtInfinity(u32),
    #[error("the semigroup of nonnegative integers has no singular point")]
    TrivialSemigroup,
    #[error("expected {expected} divisor classes, got {got}")]
    ClassCount { expected: usize, got: usize },
    #[error("scroll type must be nonempty")]
    EmptyScroll,
    #[error("difference must be positive")]
    ZeroDifference,
    #[error("parity failure: 2p-2 = {0} is odd")]
    OddGenus(i64),
}

impl Error {
    /// Short stable code used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Empty => "E_EMPTY",
            Error::ZeroEntry => "E_ZERO",
            Error::GcdNotOne(..) => "E_GCD",
            Error::NotIncreasing(_) => "E_NOT_INCREASING",
            Error::GenusTooSmall(_) => "E_GENUS_TOO_SMALL",
            Error::GenusCap { .. } => "E_GENUS_CAP",
            Error::SingularAtInfinity(_) => "E_Q_SINGULAR",
            Error::TrivialSemigroup => "E_TRIVIAL_SEMIGROUP",
            Error::ClassCount { .. } => "E_CLASS_COUNT",
            Error::EmptyScroll => "E_EMPTY_SCROLL",
            Error::ZeroDifference => "E_ZERO_DIFFERENCE",
            Error::OddGenus(_) => "E_ODD_GENUS",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
