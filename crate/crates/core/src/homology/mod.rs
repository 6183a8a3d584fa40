//! Integral simplicial homology: boundary matrices, Smith normal form,
//! Betti/torsion profiles, and collapse-accelerated variants.

pub mod boundary;
pub mod collapse;
pub mod profile;
pub mod snf;

pub use boundary::{boundary_matrices, BoundaryMatrix};
pub use collapse::TwoSkeleton;
pub use profile::{homology, homology_full, HomologyProfile};
pub use snf::{smith_normal_form, SmithForm};
