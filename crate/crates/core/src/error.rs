use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Boundary data that does not describe a closed, simple, positively
    /// oriented curve. `edge` is the index of the first offending edge.
    #[error("invalid geometry at edge {edge}: {reason}")]
    InvalidGeometry { edge: usize, reason: String },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("enumeration needs about {required:.3e} tuple evaluations, budget is {budget:.3e}")]
    BudgetExceeded { required: f64, budget: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn geometry(edge: usize, reason: impl Into<String>) -> Self {
        Error::InvalidGeometry {
            edge,
            reason: reason.into(),
        }
    }
}
