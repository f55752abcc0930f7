//! Covering dimension and radius of comparison.

pub mod dim;
pub mod rc;

pub use dim::{
    dim_at_most, dim_at_most_with, dim_bracket, find_dim_witness, verify_dim_sandwich, DimBracket, DimWitness,
    SandwichReport,
};
pub use rc::{
    audit_embedding, check_full, r1_holds, rc_bracket, verify_rc_embedding_monotone, verify_rc_soft_equality,
    Embedding, RcBracket, RcComparison,
};
