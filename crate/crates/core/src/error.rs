use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the domain ({domain})")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("s = {s} is within {radius:e} of the pole at s = 1")]
    Pole { s: f64, radius: f64 },

    #[error("series did not converge: error estimate {err_estimate:e} after {terms} terms")]
    NonConvergence { err_estimate: f64, terms: usize },

    #[error("index {index} is beyond the table (max {max})")]
    Index { index: usize, max: usize },

    #[error("s = {s} is not strictly inside the convergence region s < {limit}")]
    ConvergenceRegion { s: f64, limit: f64 },

    #[error("extrapolation unstable: corrections grew to {last_correction:e}")]
    ExtrapolationInstability { last_correction: f64 },

    #[error("invalid extrapolation path: {0}")]
    InvalidPath(&'static str),

    #[error("unknown case `{0}`")]
    UnknownCase(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }
}
