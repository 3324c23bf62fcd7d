//! Frontend for a small imperative quantum language.
//!
//! The language covers procedure definitions with `int`/`qureg`/`quvoid`
//! parameters, integer variables, register declarations, `for`/`if`/
//! `{...} until cond;` control flow, `input`/`print`/`measure`/`reset`
//! statements, the builtin gates `H`, `Not`, `CNot` and `CPhase`, and
//! adjoint calls written `!name(...)`. Programs execute against a
//! [`statevec_core::MachineState`].
//!
//! Adjoint calls of user procedures are realized by forward-evaluating the
//! body while recording primitive gates into a [`GateTrace`] without
//! applying them, then applying the recorded gates inverted and in reverse
//! order. This is sound here because classical control flow in a unitary
//! procedure cannot depend on gate effects: `measure`, `reset`, `input`
//! and `print` are rejected inside inverted calls.
//!
//! The grammar is documented in `docs/qcl-subset.md` at the repository
//! root.

mod ast;
mod error;
mod interp;
mod parser;
mod token;

pub use ast::{BinOp, Block, Expr, Param, ParamType, ProcDef, Program, Stmt, UnaryOp};
pub use error::{LexError, ParseError, RuntimeError};
pub use interp::{
    interpret, ExecutionResult, GateTrace, Interpreter, TracedGate, Value, DEFAULT_ROUND_LIMIT,
};
pub use parser::parse_program;
pub use token::{tokenize, Keyword, Token, TokenKind};

/// Lex and parse a source file in one step.
pub fn parse_source(source: &str) -> Result<Program, FrontendError> {
    let tokens = tokenize(source)?;
    Ok(parse_program(&tokens)?)
}

/// Any frontend failure, for callers that do not care about the phase.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FrontendError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Runtime(#[from] RuntimeError),
}
