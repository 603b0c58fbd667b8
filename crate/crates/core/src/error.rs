use thiserror::Error;

/// Errors shared across the engine.
///
/// Checkers do not use these for axiom failures; a failed axiom is a
/// `Report` entry with a witness. Errors are for ill-posed requests:
/// mismatched boundaries, missing structure, unsupported enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("universe not resolvable: {0}")]
    UnresolvableUniverse(String),
    #[error("enumeration unsupported: {0}")]
    EnumerationUnsupported(String),
    #[error("companion pairs are for different tight cells: {0}")]
    MismatchedTight(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("missing structure: {0}")]
    MissingStructure(String),
    #[error("missing companion for {0}")]
    MissingCompanion(String),
    #[error("level unavailable: {0}")]
    LevelUnavailable(String),
    #[error("not loosely strong: {0}")]
    NotLooselyStrong(String),
    #[error("missing coequalizers: {0}")]
    MissingCoequalizers(String),
    #[error("quantale multiplication is not commutative")]
    NotCommutative,
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("boundary error at {path}: {msg}")]
    BoundaryError { path: String, msg: String },
    #[error("config error: {0}")]
    ConfigError(String),
    #[error("parse error at {line}:{col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },
    #[error("semantic error: {0}")]
    SemanticError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
