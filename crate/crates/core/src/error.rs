use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("face {0:?} repeats a vertex")]
    UnsortableFace(Vec<u32>),
    #[error("ground set of {0} vertices exceeds the supported maximum of 64")]
    TooManyVertices(u32),
    #[error("face {0} is not in the complex")]
    FaceNotInComplex(Face),
    #[error("face {0} is not a facet")]
    NotAFacet(Face),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} too small for {what} (need at least {min})")]
    PrimeTooSmall { p: u64, min: u64, what: &'static str },
    #[error("generic computation unstable after {attempts} attempts")]
    GenericInstability { attempts: u32 },
    #[error("draw is not generic: {0}")]
    NonGeneric(String),
    #[error("shifted family is not closed under inclusion: {0} is missing")]
    ClosureViolation(Face),
    #[error("complex is not shifted")]
    NotShifted,
    #[error("independent oracles disagree: {0}")]
    Disagreement(String),
    #[error("weight of vertex {0} is zero")]
    ZeroWeight(u32),
    #[error("complex is not a near cone with respect to vertex {0}")]
    NotNearCone(u32),
    #[error("degree {m} exceeds the deleted join dimension bound {bound}")]
    DimensionExhausted { m: usize, bound: i32 },
    #[error("contraction of {u} into {v} is not admissible")]
    NotAdmissible { u: u32, v: u32 },
    #[error("vertex {0} does not belong to the complex")]
    VertexMissing(u32),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
