//! Representations of Jacobian algebras over small prime fields, King and
//! central-charge stability, and Harder–Narasimhan filtrations.

mod charge;
mod field;
mod representation;
mod stability;
mod subrep;

pub use charge::{phase_of, z_from_slope, CentralCharge, ChargeScalar, FLOAT_TOLERANCE};
pub use field::{Matrix, Subspace};
pub use representation::{all_representations, Representation};
pub use stability::{
    hn_filtration, hn_oracle, hom_dimension, is_semistable, king_classify, slope, HnFactor, KingVerdict,
    SubrepLattice,
};
pub use subrep::{subrepresentations, subrepresentations_with_bound, Subrep, DEFAULT_BOUND};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("subobject enumeration needs p <= 3, got {0}")]
    FieldTooLarge(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("coefficient {0} is not defined mod {1}")]
    Coefficient(String, u32),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("zero representation")]
    ZeroRepresentation,
    #[error("zero class")]
    ZeroClass,
    #[error("class {0:?} has negative entries")]
    MixedSigns(Vec<i64>),
    #[error("Z(S_{0}) is not in the closed upper half-plane")]
    NotInUpperHalfPlane(usize),
    #[error("rank function is not positive on simple {0}")]
    NonPositiveRank(usize),
    #[error("classes are proportional")]
    Proportional,
    #[error("central charge vanishes")]
    ZeroCharge,
    #[error("expected exactly one HN filtration, found {0}")]
    HnNotUnique(usize),
}
