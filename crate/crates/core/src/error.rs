use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the crate reports. [`Error::code`] gives a stable string
/// identifier used by the CLI's machine-readable error objects.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field size {p}^{e} exceeds 2^20")]
    TooLarge { p: u32, e: u32 },
    #[error("extension degree must be at least 1")]
    InvalidExtensionDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element or object belongs to a different field")]
    FieldMismatch,

    #[error("m = {0} must be at least 2")]
    InvalidM(u32),
    #[error("characteristic {p} divides m = {m}")]
    CharDividesM { p: u32, m: u32 },
    #[error("leading constant must be nonzero")]
    ZeroLeading,
    #[error("root with encoding {0} listed twice")]
    DuplicateRoot(u32),
    #[error("multiplicity {lambda} outside [1, m-1] for m = {m}")]
    MultiplicityOutOfRange { lambda: u32, m: u32 },
    #[error("no totally ramified place: every index has gcd(multiplicity, m) > 1")]
    NoTotallyRamifiedPlace,
    #[error("function has a pole at the evaluation place")]
    PoleAtPlace,
    #[error("unsupported place structure: {0}")]
    UnsupportedPlaceStructure(String),
    #[error("malformed place or divisor: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("tuple size n = {n} outside 2 <= n <= q = {q}")]
    QTupleTooSmallOrTooLarge { n: usize, q: u32 },
    #[error("place {0} is not totally ramified")]
    NotTotallyRamified(String),
    #[error("place {0} appears twice in the tuple")]
    DuplicatePlace(String),
    #[error("alpha vector has length {got}, expected {expected}")]
    AlphaLength { expected: usize, got: usize },

    #[error("alpha entry {0} outside [0, m-1]")]
    AlphaOutOfRange(i64),
    #[error("f is not separable")]
    NotSeparable,
    #[error("gcd(m, deg f) = {0} is not 1")]
    GcdNotOne(u32),
    #[error("alpha_0 = {0} outside [0, m-1]")]
    Alpha0OutOfRange(i64),
    #[error("multiplicity at {0} is not congruent to 1 mod m")]
    LambdaNotCongruentOne(String),
    #[error("block sizes disagree: {0}")]
    BlockSizeMismatch(String),
    #[error("exhaustive scan of {size} vectors exceeds the cap of 2^22")]
    ScanTooLarge { size: u128 },

    #[error("divisor support not handled here: {0}")]
    UnsupportedSupport(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("evaluation place {0} lies in the support of G")]
    SupportOverlap(String),
    #[error("dimension check failed: {0}")]
    DimensionMismatch(String),
    #[error("certificate does not telescope: {0}")]
    CertificateInvalid(String),

    #[error("s = {s} outside the admissible range: {detail}")]
    SRangeViolation { s: i64, detail: String },
    #[error("input divisor not certified: {0}")]
    ENotCertified(String),
    #[error("condition {which} violated: {detail}")]
    ConditionViolation { which: &'static str, detail: String },
    #[error("construction needs at least two split fibers")]
    NeedTwoFibers,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidExtensionDegree => "InvalidExtensionDegree",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidM(_) => "InvalidM",
            Error::CharDividesM { .. } => "CharDividesM",
            Error::ZeroLeading => "ZeroLeading",
            Error::DuplicateRoot(_) => "DuplicateRoot",
            Error::MultiplicityOutOfRange { .. } => "MultiplicityOutOfRange",
            Error::NoTotallyRamifiedPlace => "NoTotallyRamifiedPlace",
            Error::PoleAtPlace => "PoleAtPlace",
            Error::UnsupportedPlaceStructure(_) => "UnsupportedPlaceStructure",
            Error::Parse(_) => "ParseError",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::QTupleTooSmallOrTooLarge { .. } => "QTupleTooSmallOrTooLarge",
            Error::NotTotallyRamified(_) => "NotTotallyRamified",
            Error::DuplicatePlace(_) => "DuplicatePlace",
            Error::AlphaLength { .. } => "AlphaLength",
            Error::AlphaOutOfRange(_) => "AlphaOutOfRange",
            Error::NotSeparable => "NotSeparable",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::Alpha0OutOfRange(_) => "Alpha0OutOfRange",
            Error::LambdaNotCongruentOne(_) => "LambdaNotCongruentOne",
            Error::BlockSizeMismatch(_) => "BlockSizeMismatch",
            Error::ScanTooLarge { .. } => "ScanTooLarge",
            Error::UnsupportedSupport(_) => "UnsupportedSupport",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SupportOverlap(_) => "SupportOverlap",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::CertificateInvalid(_) => "CertificateInvalid",
            Error::SRangeViolation { .. } => "SRangeViolation",
            Error::ENotCertified(_) => "ENotCertified",
            Error::ConditionViolation { .. } => "ConditionViolation",
            Error::NeedTwoFibers => "NeedTwoFibers",
        }
    }
}
