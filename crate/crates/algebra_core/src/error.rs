//! Errors raised by table construction and transformation.

use symbolic_core::SymbolicError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("basis map is singular over the parameter field")]
    SingularBasisMap,
    #[error("basis map sends `{old}` across parities into `{new}`")]
    ParityMixedMap { old: String, new: String },
    #[error("map has {rows} rows and {cols} columns; table needs {expect} of each")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expect: usize,
    },
    #[error("generator `{0}` is odd; the classical Casimir check needs an even table")]
    OddGeneratorPresent(String),
    #[error("contraction of `{from}` produced a table that differs from `{to}`")]
    ContractionMismatch { from: String, to: String },
    #[error("malformed table serialization: {0}")]
    BadSerialization(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}
