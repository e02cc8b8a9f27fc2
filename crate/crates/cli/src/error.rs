use serde_json::{json, Value};

use crate::report::SCHEMA_VERSION;

/// Failures that abort a command. Each maps to a structured error object and
/// exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation error at {location}: {axiom}: {message}")]
    Validation {
        location: String,
        axiom: String,
        message: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{message}")]
    Computation { kind: String, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn kind(&self) -> &str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Validation { .. } => "ValidationError",
            CliError::Usage(_) => "UsageError",
            CliError::Computation { kind, .. } => kind,
            CliError::Io(_) => "IoError",
        }
    }

    pub fn to_json(&self) -> Value {
        let message = match self {
            CliError::Parse { message, .. }
            | CliError::Validation { message, .. }
            | CliError::Usage(message)
            | CliError::Computation { message, .. }
            | CliError::Io(message) => message.clone(),
        };
        let mut err = json!({ "kind": self.kind(), "message": message });
        match self {
            CliError::Parse { location, .. } => err["location"] = json!(location),
            CliError::Validation { location, axiom, .. } => {
                err["location"] = json!(location);
                err["axiom"] = json!(axiom);
            }
            _ => {}
        }
        json!({ "schema_version": SCHEMA_VERSION, "error": err })
    }
}

impl From<sympair_core::Error> for CliError {
    fn from(e: sympair_core::Error) -> Self {
        use sympair_core::Error as E;
        let kind = match &e {
            E::NonRationalSpectrum => "NonRationalSpectrum",
            E::NotSemisimple(_) => "NotSemisimple",
            E::NotASubalgebra => "NotASubalgebra",
            E::RadicalVerificationFailed(_) => "RadicalVerificationFailed",
            E::NilradicalVerificationFailed(_) => "NilradicalVerificationFailed",
            E::FormNotInvariant => "FormNotInvariant",
            E::FormDegenerate => "FormDegenerate",
            E::BaseCaseUnsupported(_) => "BaseCaseUnsupported",
            E::AdjointNotInK => "AdjointNotInK",
            E::VariableCountMismatch { .. } => "VariableCountMismatch",
            E::NotInvariant => "NotInvariant",
            E::InvalidPair { axiom, detail } => {
                return CliError::Validation {
                    location: location_of(axiom).into(),
                    axiom: axiom.clone(),
                    message: detail.clone(),
                }
            }
            E::MissingForm => {
                return CliError::Validation {
                    location: "B".into(),
                    axiom: "form.present".into(),
                    message: e.to_string(),
                }
            }
            E::OddTruncation(_) => return CliError::Usage(e.to_string()),
            E::DimensionMismatch { .. } => "DimensionMismatch",
        };
        CliError::Computation {
            kind: kind.into(),
            message: e.to_string(),
        }
    }
}

/// Input field that a structural check id refers to.
pub fn location_of(check_id: &str) -> &'static str {
    match check_id.split('.').next() {
        Some("lie") => "brackets",
        Some("sigma") | Some("split") => "sigma",
        Some("form") => "B",
        _ => "input",
    }
}
