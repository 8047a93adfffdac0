use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The variance integral has no finite value at the requested time
    /// (the administrative censoring survival reaches zero at `a + b`).
    #[error("variance integral diverges: t = {t} is not below the study end {horizon}")]
    DivergentIntegral { t: f64, horizon: f64 },

    /// Adaptive quadrature hit its refinement limit before meeting the tolerance.
    #[error("quadrature did not converge: partial estimate {estimate} (error bound {error_bound})")]
    Quadrature { estimate: f64, error_bound: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
