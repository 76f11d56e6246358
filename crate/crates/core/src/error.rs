use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative evaluation stopped before reaching its accuracy target.
    #[error("accuracy error: attained relative accuracy {attained:e}, target {target:e}")]
    Accuracy { attained: f64, target: f64 },

    /// A quantum-defect profile violates the orthonormalizability range.
    #[error("defect range violated: {0}")]
    DefectRange(String),

    /// Two sides of a mapping disagree on a quantity that must match.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Operator and state belong to different supersymmetric sectors.
    #[error("sector mismatch: {0}")]
    SectorMismatch(String),

    /// Malformed defect profile input.
    #[error("profile error: {0}")]
    Profile(String),

    /// Eigensolver failure.
    #[error("solver error: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Accuracy { .. } => "accuracy",
            Error::DefectRange(_) => "defect_range",
            Error::Consistency(_) => "consistency",
            Error::SectorMismatch(_) => "sector_mismatch",
            Error::Profile(_) => "profile",
            Error::Solver(_) => "solver",
        }
    }
}
