//! Local structure around a single point: connectivity of the nearby
//! shadow, consequences for low betti numbers, classification of planar
//! pseudomanifold patterns, and edge-count bounds for flag surfaces.

pub mod betti;
pub mod classify;
pub mod pi0;
pub mod surface;

pub use betti::{betti_consequences, BettiComparison};
pub use classify::{classify_planar_pseudomanifold, PlanarClass};
pub use pi0::{check_pi0_surjectivity, LocalPi0Report, PiecePair};
pub use surface::{surface_edge_report, SurfaceEdgeReport};
