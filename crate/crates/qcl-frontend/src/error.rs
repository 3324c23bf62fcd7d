use thiserror::Error;

/// Illegal character or unterminated literal, with source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lex error at line {line}, column {column}: {message}")]
pub struct LexError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// First grammar violation found, with source position and what would
/// have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RuntimeError {
    #[error("unbound name `{0}`")]
    UnboundName(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("the input feed is empty but the program asked for input")]
    EmptyInputFeed,

    #[error("until-loop guard: {0} rounds without the condition holding")]
    RoundLimit(usize),

    #[error("cannot invert a call that performs `{0}`")]
    NonUnitaryInverse(String),

    #[error("recursion is not supported: `{0}` called while already active")]
    RecursionUnsupported(String),

    #[error("register index out of range: {register}[{index}] on width {width}")]
    IndexOutOfRange {
        register: String,
        index: i64,
        width: usize,
    },

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error(transparent)]
    Machine(#[from] statevec_core::Error),
}
