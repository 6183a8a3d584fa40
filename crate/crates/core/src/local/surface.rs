//! Edge-count bounds for flag closed surfaces.
//!
//! A flag triangulation of a closed surface has at least 2|V| edges (each
//! vertex link is a cycle of length >= 4), while any sphere triangulation
//! has at most 3|V| - 6. When both bounds meet, every link is a 4-cycle and
//! the surface is an octahedron; the report exposes the raw numbers so a
//! caller can see which side has slack.

use crate::error::GeometryError;
use crate::simplicial::{is_closed_surface, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceEdgeReport {
    pub vertices: usize,
    pub edges: usize,
    /// 2|V|: the fewest edges a flag closed surface can have.
    pub twice_vertices: usize,
    /// 3|V| - 6: the most edges a sphere triangulation can have.
    pub triple_vertices_less_six: usize,
    pub links_all_four_cycles: bool,
}

impl SurfaceEdgeReport {
    /// True exactly when the two bounds pinch the edge count.
    pub fn at_equality(&self) -> bool {
        self.edges == self.twice_vertices && self.edges == self.triple_vertices_less_six
    }
}

pub fn surface_edge_report(k: &SimplicialComplex) -> Result<SurfaceEdgeReport, GeometryError> {
    if !is_closed_surface(k) {
        return Err(GeometryError::NotClosedSurface);
    }
    let vertices = k.vertices().len();
    let edges = k.faces_of_dim(1).len();
    // a closed surface has >= 4 vertices, so the subtraction is safe
    let triple_vertices_less_six = 3 * vertices - 6;
    let links_all_four_cycles = k
        .vertices()
        .iter()
        .all(|&v| k.link(v).vertices().len() == 4);
    Ok(SurfaceEdgeReport {
        vertices,
        edges,
        twice_vertices: 2 * vertices,
        triple_vertices_less_six,
        links_all_four_cycles,
    })
}
