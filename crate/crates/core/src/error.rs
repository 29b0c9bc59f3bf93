use thiserror::Error;

/// Every failure the library reports.
///
/// Mathematical refusals (the computation is well posed but the requested
/// object does not exist or lies outside the supported classes) are kept
/// distinct from resource failures so that callers can tell "no" from
/// "could not decide".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("checked exponent overflow while computing {0}")]
    Overflow(String),
    #[error("step budget exhausted after {limit} S-polynomial reductions")]
    BudgetExceeded { limit: u64 },
    #[error("(I^[q] : I) is not principal modulo I^[q] at level e = {e}")]
    NotPrincipal { e: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("seed element {0} lies in the center")]
    SeedInQ(String),
    #[error("exponent denominator {den} does not divide p^e - 1 for any level e <= {emax}")]
    IncompatibleExponentDenominator { den: u64, emax: u32 },
    #[error("ideal is not compatible with the map: {0}")]
    NotCompatible(String),
    #[error("map is not surjective at the generic point of the center: {0}")]
    NotPureAtGenericPoint(String),
    #[error("invalid map datum: {0}")]
    InvalidDatum(String),
    #[error("no factorization available for {0}")]
    FactorizationUnavailable(String),
    #[error("ideal is not prime: {0}")]
    NotPrime(String),
    #[error("{0} is not a supported prime characteristic")]
    BadCharacteristic(u64),
    #[error("input must be homogeneous")]
    NotHomogeneous,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("consistency check failed: {0}")]
    Discrepancy(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    /// Stable machine-readable code used by the JSON report.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch => "RingMismatch",
            Error::Overflow(_) => "OverflowChecked",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NotPrincipal { .. } => "NotPrincipal",
            Error::Unsupported(_) => "Unsupported",
            Error::SeedInQ(_) => "SeedInQ",
            Error::IncompatibleExponentDenominator { .. } => "IncompatibleExponentDenominator",
            Error::NotCompatible(_) => "NotCompatible",
            Error::NotPureAtGenericPoint(_) => "NotPureAtGenericPoint",
            Error::InvalidDatum(_) => "InvalidDatum",
            Error::FactorizationUnavailable(_) => "FactorizationUnavailable",
            Error::NotPrime(_) => "NotPrime",
            Error::BadCharacteristic(_) => "BadCharacteristic",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Discrepancy(_) => "Discrepancy",
            Error::Parse { .. } => "ParseError",
        }
    }

    /// True for answers of the form "this does not exist / is not supported",
    /// as opposed to resource exhaustion or malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotPrincipal { .. }
                | Error::Unsupported(_)
                | Error::SeedInQ(_)
                | Error::IncompatibleExponentDenominator { .. }
                | Error::NotCompatible(_)
                | Error::NotPureAtGenericPoint(_)
                | Error::FactorizationUnavailable(_)
                | Error::NotPrime(_)
                | Error::NotHomogeneous
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
