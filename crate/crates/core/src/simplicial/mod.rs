//! Point clouds, proximity graphs, flag complexes, and combinatorial
//! recognizers for the complexes this crate studies.

pub mod cloud;
pub mod complex;
pub mod crosspolytope;
pub mod recognizers;
pub mod rips;

pub use cloud::{decompose, Decomposition, PointCloud};
pub use complex::SimplicialComplex;
pub use crosspolytope::{crosspolytope, crosspolytope_dimension};
pub use recognizers::{
    icosahedron_boundary, is_closed_surface, is_single_cycle, pseudomanifold_report,
    seven_vertex_torus, six_vertex_projective_plane, PmViolation, PseudomanifoldReport,
};
pub use rips::{proximity_graph, rips_complex, rips_complex_on};
