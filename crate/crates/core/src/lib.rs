//! Exact finite-dimensional Hopf algebra, Hopf algebroid and bicrossproduct
//! computations over the rationals.

pub mod algebroid;
pub mod bicross;
pub mod catalog;
pub mod exactlin;
pub mod format;
pub mod hopfcore;
pub mod report;
pub mod scalar;
pub mod tensorspace;

pub use exactlin::{LinError, Matrix, Vector};
pub use report::{AxiomEntry, CheckReport, Witness};
pub use scalar::Scalar;
pub use tensorspace::{BasedSpace, LinearMap, QuotientSpace};
