//! Prohorov distances, common embeddings and interleaving verifiers.

pub mod embedding;
pub mod prohorov;
pub mod verify;

pub use embedding::{
    check_projection_inequality, gp_upper_bound, nearest_neighbor_projection, pushforward, CommonEmbedding,
    ProjectionReport,
};
pub use prohorov::{prohorov_check, prohorov_distance, ProhorovCheck, CHECK_SUPPORT_CAP, SUPPORT_CAP};
pub use verify::{
    verify_complex_interleaving, verify_sandwich, verify_set_interleaving_eps, verify_set_interleaving_shift,
    CompositeReading, ConditionReport, InterleavingReport, Witness,
};
