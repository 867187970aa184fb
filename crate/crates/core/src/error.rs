use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid coordinate range {start}..{end} for {len} coordinates")]
    InvalidRange { start: usize, end: usize, len: usize },

    #[error("cannot reduce {value} modulo {modulus}: denominator is divisible by the modulus")]
    NotReducible { value: String, modulus: u64 },

    #[error("Leibniz identity fails on basis triple ({0}, {1}, {2})")]
    NotLeibniz(String, String, String),

    #[error("product is not commutative on basis pair ({0}, {1})")]
    NotCommutative(String, String),

    #[error("product is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(String, String, String),

    #[error("claimed unit is not a unit: fails against basis element {0}")]
    BadUnit(String),

    #[error("subspace is not a {sides} ideal: {detail}")]
    NotAnIdeal { sides: &'static str, detail: String },

    #[error("map does not leave the ideal invariant (not in the stabiliser of the kernel)")]
    NotInvariant,

    #[error("map is not idempotent")]
    NotIdempotent,

    #[error("map is not in the Lie-centroid")]
    NotInCentroid,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown operator space `{0}`")]
    UnknownSpace(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
