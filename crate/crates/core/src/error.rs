use thiserror::Error;

/// Errors shared across the library.
///
/// Validation of candidate morphisms is report-style (see the per-module
/// report types); these errors are for precondition failures and malformed
/// inputs, where there is no useful partial answer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("carrier of size {size} exceeds the configured bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("lattice is not distributive (witness meet-join triple {witness:?})")]
    NotDistributive { witness: (u32, u32, u32) },
    #[error("invalid MT-algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("map is not a frame morphism: {0}")]
    NotFrameMorphism(String),
    #[error("map is not a bounded lattice homomorphism: {0}")]
    NotBoundedLatticeHom(String),
    #[error("map is not an MT-morphism: {0}")]
    NotMtMorphism(String),
    #[error("map is not continuous: preimage of open {open:#x} is not open")]
    NotContinuous { open: u64 },
    #[error("map is not a verified proximity morphism")]
    NotVerified,
    #[error("algebra is not T0")]
    NotT0,
    #[error("filter is not slicing")]
    NotSlicing,
    #[error("family is not a boolean subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("source/target mismatch when composing")]
    SourceTargetMismatch,
    #[error("morphism is not a D-morphism (witness atom {witness:#x})")]
    NotD { witness: u64 },
    #[error("target algebra is not TD")]
    TargetNotTd,
    #[error("source space is not TD")]
    SourceNotTd,
    #[error("map is not locally closed (witness point {witness})")]
    NotLocallyClosedMap { witness: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
