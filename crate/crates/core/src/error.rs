use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported group descriptor `{0}`")]
    UnsupportedDescriptor(String),

    #[error("group order {order} exceeds the limit {limit}")]
    OrderLimit { order: usize, limit: usize },

    #[error("invalid class id {0}")]
    InvalidClass(usize),

    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),

    #[error("non-exact division while computing the coefficient of {class}: {numerator} / {denominator}")]
    NonExactDivision {
        class: String,
        numerator: i64,
        denominator: i64,
    },

    #[error("integer overflow in Burnside ring arithmetic")]
    Overflow,

    #[error("elements belong to different Burnside rings")]
    AmbientMismatch,

    #[error("class catalog too small: fold bound {required} required, catalog covers {available}")]
    CatalogTooSmall { required: u32, available: u32 },

    #[error("non-resonance violated: s_{{{n},{m}}} = {zero} is within {gap:e} of eigenvalue {mu}")]
    Resonance {
        n: usize,
        m: usize,
        zero: f64,
        mu: f64,
        gap: f64,
    },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown class name `{0}`")]
    UnknownClassName(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
