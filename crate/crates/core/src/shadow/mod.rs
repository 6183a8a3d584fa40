//! Topology of the shadow (the union of convex hulls of faces) computed
//! through the nerve of the maximal-face cover.

pub mod nerve;
pub mod pieces;

pub use nerve::{multi_hull_common_point, nerve, shadow_betti, CoverNerve};
pub use pieces::{shadow_contains, shadow_pieces, ConvexPiece};
