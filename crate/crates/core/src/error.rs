use thiserror::Error;

/// Failures shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization effort bound exceeded while splitting {0}")]
    EffortExceeded(String),
    #[error(
        "precision exceeded: height bound needs {needed} bits, working precision has {available}"
    )]
    PrecisionExceeded { needed: u64, available: u64 },
    #[error("element is not binomial: {0}")]
    NotBinomial(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("alpha is already a square in the field")]
    AlphaIsSquare,
    #[error("elements belong to different fields (m = {0} vs m = {1})")]
    FieldMismatch(String, String),
    #[error("twist scales differ (b = {0} vs b = {1})")]
    TwistMismatch(String, String),
    #[error("zero element has no binomial square structure")]
    ZeroElement,
    #[error("m = {0} does not define a pure cubic field (must be cubefree and not a cube)")]
    InvalidField(String),
    #[error("curve parameter must be a nonzero integer: {0}")]
    InvalidCurve(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("table data: {0}")]
    TableData(String),
    #[error("independent routes disagree: {0}")]
    RouteDisagreement(String),
}

impl Error {
    /// Stable name used on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EffortExceeded(_) => "EffortExceeded",
            Error::PrecisionExceeded { .. } => "PrecisionExceeded",
            Error::NotBinomial(_) => "NotBinomial",
            Error::InvalidPoint(_) => "InvalidPoint",
            Error::AlphaIsSquare => "AlphaIsSquare",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::TwistMismatch(..) => "TwistMismatch",
            Error::ZeroElement => "ZeroElement",
            Error::InvalidField(_) => "InvalidField",
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::TableData(_) => "TableData",
            Error::RouteDisagreement(_) => "RouteDisagreement",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
