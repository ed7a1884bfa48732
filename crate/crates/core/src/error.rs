use thiserror::Error;

/// Errors produced by the reasoning library and the `mc` front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("undeclared {kind} name `{name}`")]
    UndeclaredName { kind: &'static str, name: String },

    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("concept `{concept}` is outside the {required} dialect")]
    Dialect { concept: String, required: &'static str },

    #[error("concept `{0}` is unsatisfiable")]
    Unsatisfiable(String),

    #[error("pointed interpretation is not a finite tree: {0}")]
    NotTree(String),

    #[error("invalid interpretation: `{key}` refers to `{element}`: {reason}")]
    Interpretation {
        key: String,
        element: String,
        reason: String,
    },

    #[error("request is not realizable: {0}")]
    Realizability(String),

    #[error("universe budget exceeded: {count} classes (limit {limit})")]
    Budget { count: String, limit: usize },

    #[error("outside the bounded fragment: {0}")]
    Fragment(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
