//! Exact-arithmetic kernel for experiments on Euclidean Vietoris-Rips complexes.
//!
//! The crate is organised around one pipeline: finite rational point clouds
//! (`geometry`, `simplicial`) give rise to flag complexes whose integral
//! homology is computed exactly (`homology`); the union of convex hulls of
//! faces (the *shadow*) is analysed through nerves of convex covers
//! (`shadow`); local connectivity of vertex-star decompositions and
//! pseudomanifold recognition live in `local`; and `universal` realises a
//! prescribed finite complex as a Rips complex of a dense sample at a small
//! scale, with certified rational bounds throughout.
//!
//! Every geometric predicate is decided exactly over arbitrary-precision
//! rationals: comparisons against a scale use squared distances with
//! sign guards, convexity questions become rational LP feasibility, and no
//! floating-point tolerance appears anywhere in a decision path. The single
//! floating-point component is the subgradient solver for min-diameter
//! transversals, whose output is always re-certified in rational arithmetic.

pub mod error;
pub mod geometry;
pub mod homology;
pub mod local;
pub mod shadow;
pub mod simplicial;
pub mod universal;

pub use error::GeometryError;
pub use geometry::rational::{rat, Rational};
pub use geometry::{Metric, Point};
pub use homology::{homology, homology_full, HomologyProfile};
pub use simplicial::{PointCloud, SimplicialComplex};
