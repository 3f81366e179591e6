use std::fmt;

use stabcat_core::Error as CoreError;

/// Failures of the command-line layer. Library errors pass through
/// unchanged inside `Library`.
#[derive(Debug)]
pub enum CliError {
    Io { path: String, message: String },
    /// Malformed JSON or a document that does not match the schema.
    Parse { line: usize, column: usize, message: String },
    /// A well-formed document whose entity violates an invariant.
    Validation { entity: String, message: String },
    UnknownReference { kind: &'static str, name: String, context: String },
    Usage(String),
    Library(CoreError),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn validation(entity: impl Into<String>, e: impl fmt::Display) -> CliError {
        CliError::Validation { entity: entity.into(), message: e.to_string() }
    }

    pub fn unknown(kind: &'static str, name: &str, context: impl Into<String>) -> CliError {
        CliError::UnknownReference { kind, name: name.to_string(), context: context.into() }
    }

    /// Process exit status: 3 for exhausted budgets, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(CoreError::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Validation { .. } => "validation",
            CliError::UnknownReference { .. } => "unknown_reference",
            CliError::Usage(_) => "usage",
            CliError::Library(CoreError::BudgetExceeded { .. }) => "budget_exceeded",
            CliError::Library(_) => "library",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Parse { line, column, message } => write!(f, "parse error at line {line}, column {column}: {message}"),
            CliError::Validation { entity, message } => write!(f, "invalid {entity}: {message}"),
            CliError::UnknownReference { kind, name, context } => write!(f, "{context}: unknown {kind} `{name}`"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Library(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        let text = e.to_string();
        let message = text.split(" at line ").next().unwrap_or(&text).to_string();
        CliError::Parse { line: e.line(), column: e.column(), message }
    }
}
