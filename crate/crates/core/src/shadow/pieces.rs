//! The convex cover of a cloud's shadow: one hull per maximal face.

use crate::geometry::hull::{hull_contains, Aabb};
use crate::geometry::Point;
use crate::simplicial::{rips_complex, PointCloud};

/// Convex hull of the points of one maximal face, kept with its generator
/// ids and bounding box so intersection tests can short-circuit.
#[derive(Debug, Clone)]
pub struct ConvexPiece {
    generators: Vec<usize>,
    points: Vec<Point>,
    bbox: Aabb,
}

impl ConvexPiece {
    pub fn new(generators: Vec<usize>, points: Vec<Point>) -> Self {
        assert_eq!(generators.len(), points.len());
        let bbox = Aabb::of_points(points.iter()).expect("piece needs a generator");
        ConvexPiece {
            generators,
            points,
            bbox,
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn bbox(&self) -> &Aabb {
        &self.bbox
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.bbox.contains(x) && hull_contains(&self.points, x)
    }

    /// True when some generator id appears in every listed piece.
    pub fn share_generator(pieces: &[&ConvexPiece]) -> bool {
        let (first, rest) = pieces.split_first().expect("nonempty piece list");
        first
            .generators
            .iter()
            .any(|g| rest.iter().all(|p| p.generators.contains(g)))
    }
}

/// One piece per maximal face of the flag complex; their union is the shadow.
/// Hulls of faces that are not maximal add nothing to the union, so the cover
/// stays small without changing the set it covers.
pub fn shadow_pieces(cloud: &PointCloud) -> Vec<ConvexPiece> {
    let complex = rips_complex(cloud, None);
    complex
        .maximal_faces()
        .iter()
        .map(|face| {
            let pts = face.iter().map(|&v| cloud.point(v).clone()).collect();
            ConvexPiece::new(face.clone(), pts)
        })
        .collect()
}

/// Exact membership of `x` in the shadow: containment in any piece.
pub fn shadow_contains(cloud: &PointCloud, x: &Point) -> bool {
    assert_eq!(Some(x.dim()), cloud.dim(), "dimension mismatch");
    shadow_pieces(cloud).iter().any(|p| p.contains(x))
}
