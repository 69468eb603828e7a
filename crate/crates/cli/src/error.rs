use ricci_core::curvature::CurvatureError;
use ricci_core::enumerate::EnumerateError;
use ricci_core::transport::TransportError;
use ricci_core::GraphError;
use thiserror::Error;

/// Failures grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, bad arguments: exit 2.
    #[error("{0}")]
    Input(String),
    /// A well-formed request whose preconditions fail (e.g. not an edge): exit 3.
    #[error("{0}")]
    Domain(String),
    /// Outside the supported size envelope: exit 4.
    #[error("{0}")]
    Range(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Range(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::NotAnEdge(..) | GraphError::IndexOutOfRange { .. } => {
                CliError::Domain(e.to_string())
            }
            GraphError::UnsupportedSize(_) => CliError::Range(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CurvatureError> for CliError {
    fn from(e: CurvatureError) -> Self {
        match e {
            CurvatureError::Graph(g) => g.into(),
            CurvatureError::AlphaOutOfRange(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<TransportError> for CliError {
    fn from(e: TransportError) -> Self {
        match e {
            TransportError::Graph(g) => g.into(),
            TransportError::AlphaOutOfRange(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::OutOfSupportedRange { .. } => CliError::Range(e.to_string()),
            EnumerateError::InvalidRequest { .. } => CliError::Domain(e.to_string()),
            EnumerateError::Curvature(c) => c.into(),
        }
    }
}
