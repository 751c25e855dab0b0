//! Builders for bifiltered complexes.

pub mod cech;
pub mod dowker;
pub mod measure_bif;
pub mod planar;

pub use cech::{ambient_dc_finite, intrinsic_dc, measure_dowker_reindex, restrict_to_support};
pub use dowker::{
    degree_bifiltration, dowker_dual, dtm_bifiltration, nerve_bifiltration, pair_id, pair_of, rectangle_bifiltration,
    rectangle_complex, DowkerDissimilarity, SetBifiltration,
};
pub use measure_bif::{cover_nerve, measure_bifiltration_points};
pub use planar::ambient_dc_planar;
