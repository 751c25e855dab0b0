//! Homology with GF(2) coefficients.

pub mod bottleneck;
pub mod persistence;
pub mod reduction;

pub use bottleneck::bottleneck_distance;
pub use persistence::{
    betti, betti_table, filtration_barcode, inclusion_induces_iso, slice_persistence, Barcode, BettiTable, BettiVector,
    Interval,
};
