use thiserror::Error;

use crate::mode::ModeLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("expected {expected} entries, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("state norm deviates from 1 by {deviation:e}")]
    NotNormalized { deviation: f64 },

    #[error("mode {0} is not part of this state")]
    UnknownMode(ModeLabel),

    #[error("mode {0} listed more than once")]
    DuplicateMode(ModeLabel),

    #[error("partial trace must keep at least one mode")]
    EmptyKeepSet,

    #[error("matrix is not Hermitian (relative asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },

    #[error("trace deviates from 1 by {deviation:e}")]
    NotUnitTrace { deviation: f64 },

    #[error("matrix has eigenvalue {eigenvalue:e} below the PSD floor")]
    NotPositive { eigenvalue: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error(
        "negativity formulations disagree: trace norm form {trace_norm_form:e}, \
         negative mass form {negative_mass_form:e}"
    )]
    InconsistentNegativity {
        trace_norm_form: f64,
        negative_mass_form: f64,
    },

    #[error("{name} = {value} is outside [0, π/4]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}
