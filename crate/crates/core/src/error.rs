use std::fmt;

use crate::applicability::Violation;
use crate::model::ModelId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no registered model {0}")]
    UnknownModel(ModelId),

    #[error("model {id} is a {actual} model, not a {expected} model")]
    WrongKind {
        id: ModelId,
        expected: &'static str,
        actual: &'static str,
    },

    /// Raised only when applicability is enforced (strict mode).
    #[error("outside applicability range: {}", Violations(.0))]
    NotApplicable(Vec<Violation>),

    #[error("rank-deficient design: {parameter} is unidentifiable ({reason})")]
    RankDeficient {
        parameter: &'static str,
        reason: String,
    },

    #[error("fit error: {0}")]
    Fit(String),

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

struct Violations<'a>(&'a [Violation]);

impl fmt::Display for Violations<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
