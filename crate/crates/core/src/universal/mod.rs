//! Realizing a prescribed finite complex as a proximity complex of a dense
//! Euclidean sample, with certified rational bounds at every stage.
//!
//! The pipeline: validate a straight-line embedding (`embedded`), find the
//! critical scale below which sampling is safe by solving min-diameter
//! transversals of separating face families (`families`, `transversal`,
//! `epsilon`), lay out a dense rational sample (`plan`), and verify the
//! sample's proximity complex against the target, either directly or by a
//! cover-and-crush homotopy certificate (`crush`, `cover`, `realize`).

pub mod cover;
pub mod crush;
pub mod embedded;
pub mod epsilon;
pub mod families;
pub mod plan;
pub mod realize;
pub mod transversal;

pub use cover::{verify_cover_condition, CoverWitness};
pub use crush::{crush_collapse, CrushOutcome};
pub use embedded::{validate_embedding, EmbeddedComplex, EmbeddingReport, EmbeddingViolation};
pub use epsilon::{epsilon_bracket, EpsilonBracket};
pub use families::{enumerate_minimal_empty_families, EmptyFamily};
pub use plan::{sampling_plan, FaceGrid, SamplingPlan, DEFAULT_SAMPLE_CAP};
pub use realize::{realize, RealizeReport, RealizeStrategy};
pub use transversal::{min_diameter_transversal, TransversalSolution};
