use thiserror::Error;

/// Errors produced by domain validation across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument fell outside its allowed range.
    #[error("{name} = {value} is outside {domain}")]
    OutsideDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A spectrum failed normalization.
    #[error("spectrum entries must sum to 1 within 1e-10 (got {sum})")]
    SpectrumNotNormalized { sum: f64 },

    /// The entropic order q is not usable for the requested operation.
    #[error("entropy order q = {q} rejected: {reason}")]
    InvalidOrder { q: f64, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
