use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Invalid` marks malformed input (a caller bug or a bad scenario file);
/// everything else is a computation that was attempted and refused or failed
/// one of its internal exact checks.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Localization requires pairwise distinct one-parameter-subgroup weights.
    #[error("non-generic weights: {0}")]
    NonGenericWeights(String),

    /// A gating hypothesis of a closed-form formula does not hold.
    #[error("refused: {check} failed ({diagnostic})")]
    Refused { check: String, diagnostic: String },

    /// An exact internal cross-check disagreed; indicates a logic bug
    /// or inconsistent scenario data.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    /// A seeded "generic" construction produced a degenerate configuration.
    #[error("non-generic seed: {0}; resample with a different seed")]
    NonGenericSeed(String),

    /// Sampled values do not lie on a polynomial of the expected degree.
    #[error("samples are not polynomial: {0}")]
    NotPolynomial(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// True when the error indicates bad input rather than a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Invalid(_))
    }
}
