//! Dual degree Čech bifiltrations of finite measured metric spaces: builders,
//! GF(2) homology, Prohorov distances and interleaving verifiers.

pub mod bifiltration;
pub mod error;
pub mod homology;
pub mod interleaving;
pub mod io;
pub mod measure;
pub mod metric;
pub mod shift;
pub mod random;
pub mod simplex;
pub mod staircase;
pub mod suites;

pub use error::{Error, Result};
pub use measure::DiscreteMeasure;
pub use metric::{validate_metric, FiniteMetricSpace};
pub use shift::{ForwardShift, MonotonePath, PathPoint};
pub use simplex::{Simplex, SimplicialComplex};
pub use staircase::{BifilteredComplex, Staircase, DEFAULT_DIM_CAP};
