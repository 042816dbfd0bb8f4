use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid example plan: {0}")]
    PlanInvalid(String),
    #[error("p = {p} is too small: the oracle needs p > 2n = {bound}")]
    PrimeTooSmall { p: u64, bound: u64 },
    #[error("config error{}: field `{field}`: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Config { field: String, line: Option<usize>, message: String },
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Ladder(#[from] deformation_ladder::LadderError),
    #[error(transparent)]
    Local(#[from] local_tame::LocalError),
    #[error(transparent)]
    Cohom(#[from] fpcohomology::CohomError),
    #[error(transparent)]
    GMod(#[from] gmodules::GModError),
    #[error(transparent)]
    Symp(#[from] symplectic_core::SympError),
    #[error(transparent)]
    Root(#[from] root_data::RootError),
    #[error(transparent)]
    Ring(#[from] galois_rings::RingError),
}

impl CliError {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        CliError::Config { field: field.to_string(), line: None, message: message.into() }
    }

    /// Whether the error belongs to exit code 2.
    pub fn is_config_error(&self) -> bool {
        matches!(self, CliError::Config { .. } | CliError::PlanInvalid(_) | CliError::PrimeTooSmall { .. } | CliError::Io { .. })
    }
}
