use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Usage { flag: String, message: String },

    #[error(transparent)]
    Domain(#[from] cotan_core::Error),

    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn usage(flag: &str, message: impl Into<String>) -> Self {
        CliError::Usage { flag: flag.to_string(), message: message.into() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage { .. } => 2,
            CliError::Domain(_) | CliError::Output(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        use cotan_core::Error as E;
        match self {
            CliError::Usage { .. } => "usage",
            CliError::Output(_) => "output",
            CliError::Domain(e) => match e {
                E::InvalidRank { .. } => "invalid_rank",
                E::DimensionMismatch { .. } => "dimension_mismatch",
                E::ZeroVector => "zero_vector",
                E::NonIntegralPairing => "non_integral_pairing",
                E::IndexOutOfRange { .. } => "index_out_of_range",
                E::GroupTooLarge { .. } => "group_too_large",
                E::TooLarge { .. } => "too_large",
                E::NotDominant(_) => "not_dominant",
                E::NotJDominant(_) => "not_j_dominant",
                E::NotWInvariant(_) => "not_w_invariant",
                E::NotInJW => "not_in_jw",
                E::AssumptionViolated { .. } => "assumption_violated",
                E::PreconditionFailed(_) => "precondition_failed",
                E::InvalidParameter(_) => "invalid_parameter",
                E::SizeMismatch { .. } => "size_mismatch",
            },
        }
    }

    pub fn report(&self) -> ErrorReport {
        let flag = match self {
            CliError::Usage { flag, .. } => Some(flag.clone()),
            _ => None,
        };
        ErrorReport { error: self.kind().to_string(), flag, message: self.to_string() }
    }
}

/// Structured form written to stderr for `--format json`.
#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct ErrorReport {
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flag: Option<String>,
    pub message: String,
}
