//! Five-point apex search and the reduction of 3-space hull intersections
//! to triangle-against-segment certificates.

use std::fmt;

use super::hull::{hull_contains, hulls_intersect};
use super::metric::Metric;
use super::point::Point;
use super::rational::Rational;
use crate::error::GeometryError;

/// Labels for the five points of an apex configuration: a triangle `A,B,C`
/// and a segment `P,Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointLabel {
    A,
    B,
    C,
    P,
    Q,
}

impl PointLabel {
    pub const ALL: [PointLabel; 5] = [
        PointLabel::A,
        PointLabel::B,
        PointLabel::C,
        PointLabel::P,
        PointLabel::Q,
    ];

    pub fn index(self) -> usize {
        PointLabel::ALL.iter().position(|&l| l == self).unwrap()
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The first labelled point (in the fixed order `A,B,C,P,Q`) lying strictly
/// within `r` of the other four, if any. Brute force over the candidates;
/// coincident points are allowed.
pub fn find_apex(points: &[Point; 5], r: &Rational, metric: &Metric) -> Option<PointLabel> {
    for (i, label) in PointLabel::ALL.into_iter().enumerate() {
        let ok = (0..5).all(|j| j == i || metric.within(&points[i], &points[j], r, true));
        if ok {
            return Some(label);
        }
    }
    None
}

/// Does the closed segment `PQ` meet the closed triangle `ABC` in 3-space?
/// Degenerate (collapsed) segments and triangles are allowed.
pub fn segment_triangle_intersect(seg: &[Point; 2], tri: &[Point; 3]) -> bool {
    for p in seg.iter().chain(tri.iter()) {
        assert_eq!(p.dim(), 3, "intersection test is specific to dimension 3");
    }
    hulls_intersect(seg.as_slice(), tri.as_slice())
}

/// Two generator sets whose hulls are compared.
#[derive(Clone, Debug)]
pub struct HullPair {
    pub gens_a: Vec<Point>,
    pub gens_b: Vec<Point>,
}

impl HullPair {
    pub fn new(gens_a: Vec<Point>, gens_b: Vec<Point>) -> Self {
        assert!(!gens_a.is_empty() && !gens_b.is_empty(), "empty generator set");
        let dim = gens_a[0].dim();
        for p in gens_a.iter().chain(gens_b.iter()) {
            assert_eq!(p.dim(), dim, "dimension mismatch");
        }
        HullPair { gens_a, gens_b }
    }

    pub fn intersects(&self) -> bool {
        hulls_intersect(&self.gens_a, &self.gens_b)
    }
}

/// Certificate produced by [`reduce_hull_intersection`]. Indices refer back
/// to generator positions in the input pair; triangles and segments may
/// repeat an index (degenerate witnesses are legal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullReduction {
    /// Every generator of the first set lies in the hull of the second.
    ContainsAInB,
    /// Every generator of the second set lies in the hull of the first.
    ContainsBInA,
    /// A triangle from one side meets a segment from the other.
    TriSeg {
        triangle: [usize; 3],
        segment: [usize; 2],
        triangle_from_a: bool,
    },
}

/// Reduce an intersecting pair of hulls with at most four generators each,
/// in 3-space, to a primitive witness: a containment, or a triangle of one
/// meeting a segment of the other. Search order is deterministic:
/// containments first, then triangle-from-first-set witnesses in
/// lexicographic index order, then the swapped family.
pub fn reduce_hull_intersection(pair: &HullPair) -> Result<HullReduction, GeometryError> {
    assert!(pair.gens_a.len() <= 4 && pair.gens_b.len() <= 4, "too many generators");
    assert_eq!(pair.gens_a[0].dim(), 3, "reduction is specific to dimension 3");
    if !pair.intersects() {
        return Err(GeometryError::DisjointHulls);
    }
    if pair.gens_a.iter().all(|p| hull_contains(&pair.gens_b, p)) {
        return Ok(HullReduction::ContainsAInB);
    }
    if pair.gens_b.iter().all(|p| hull_contains(&pair.gens_a, p)) {
        return Ok(HullReduction::ContainsBInA);
    }
    for (tri_side, seg_side, from_a) in
        [(&pair.gens_a, &pair.gens_b, true), (&pair.gens_b, &pair.gens_a, false)]
    {
        if let Some(red) = tri_seg_search(tri_side, seg_side, from_a) {
            return Ok(red);
        }
    }
    unreachable!(
        "intersecting hulls with <= 4 generators in 3-space always admit a \
         containment or a triangle/segment witness"
    );
}

fn tri_seg_search(tri_side: &[Point], seg_side: &[Point], from_a: bool) -> Option<HullReduction> {
    let nt = tri_side.len();
    let ns = seg_side.len();
    for i in 0..nt {
        for j in i..nt {
            for k in j..nt {
                let tri = [tri_side[i].clone(), tri_side[j].clone(), tri_side[k].clone()];
                for p in 0..ns {
                    for q in p..ns {
                        let seg = [seg_side[p].clone(), seg_side[q].clone()];
                        if segment_triangle_intersect(&seg, &tri) {
                            return Some(HullReduction::TriSeg {
                                triangle: [i, j, k],
                                segment: [p, q],
                                triangle_from_a: from_a,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    #[test]
    fn coincident_segment_endpoint_forces_an_apex() {
        let a = Point::from_ints(&[0, 0, 0]);
        let b = Point::from_ints(&[1, 0, 0]);
        let c = Point::from_ints(&[0, 1, 0]);
        let pts = [a.clone(), b, c, a.clone(), Point::from_ints(&[0, 0, 1])];
        // A and P coincide; A is checked first.
        assert_eq!(find_apex(&pts, &rat(2, 1), &Metric::Euclidean), Some(PointLabel::A));
    }

    #[test]
    fn apex_requires_strict_inequality() {
        let pts = [
            Point::from_ints(&[0, 0, 0]),
            Point::from_ints(&[1, 0, 0]),
            Point::from_ints(&[0, 1, 0]),
            Point::from_ints(&[0, 0, 1]),
            Point::from_ints(&[1, 1, 1]),
        ];
        // At r = 3/2 the corner B reaches everything (worst pair squared 2).
        assert_eq!(find_apex(&pts, &rat(3, 2), &Metric::Euclidean), Some(PointLabel::B));
        // At r = 7/5 (r^2 = 49/25 < 2) every candidate has a far partner.
        assert_eq!(find_apex(&pts, &rat(7, 5), &Metric::Euclidean), None);
    }

    #[test]
    fn segment_through_triangle_interior() {
        let tri = [
            Point::from_ints(&[0, 0, 0]),
            Point::from_ints(&[2, 0, 0]),
            Point::from_ints(&[0, 2, 0]),
        ];
        let seg = [Point::from_pairs(&[(1, 2), (1, 2), (-1, 1)]), Point::from_pairs(&[(1, 2), (1, 2), (1, 1)])];
        assert!(segment_triangle_intersect(&seg, &tri));
        let miss = [Point::from_ints(&[5, 5, -1]), Point::from_ints(&[5, 5, 1])];
        assert!(!segment_triangle_intersect(&miss, &tri));
    }

    fn tetra() -> Vec<Point> {
        vec![
            Point::from_ints(&[0, 0, 0]),
            Point::from_ints(&[4, 0, 0]),
            Point::from_ints(&[0, 4, 0]),
            Point::from_ints(&[0, 0, 4]),
        ]
    }

    #[test]
    fn point_inside_tetrahedron_is_a_containment() {
        let pair = HullPair::new(tetra(), vec![Point::from_ints(&[1, 1, 1])]);
        assert_eq!(reduce_hull_intersection(&pair).unwrap(), HullReduction::ContainsBInA);
    }

    #[test]
    fn identical_hulls_report_first_containment() {
        let pair = HullPair::new(tetra(), tetra());
        assert_eq!(reduce_hull_intersection(&pair).unwrap(), HullReduction::ContainsAInB);
    }

    #[test]
    fn disjoint_hulls_are_rejected() {
        let far = vec![Point::from_ints(&[10, 10, 10])];
        let pair = HullPair::new(tetra(), far);
        assert!(matches!(reduce_hull_intersection(&pair), Err(GeometryError::DisjointHulls)));
    }

    #[test]
    fn crossing_skew_triangles_yield_a_tri_seg_witness() {
        // Two triangles crossing like links; neither contains the other.
        let a = vec![
            Point::from_ints(&[-2, 0, 0]),
            Point::from_ints(&[2, 0, 0]),
            Point::from_ints(&[0, 0, 3]),
        ];
        let b = vec![
            Point::from_ints(&[0, -2, 1]),
            Point::from_ints(&[0, 2, 1]),
            Point::from_ints(&[0, 0, -2]),
        ];
        let pair = HullPair::new(a.clone(), b.clone());
        match reduce_hull_intersection(&pair).unwrap() {
            HullReduction::TriSeg { triangle, segment, triangle_from_a } => {
                let (tri_side, seg_side) = if triangle_from_a { (&a, &b) } else { (&b, &a) };
                let tri = [
                    tri_side[triangle[0]].clone(),
                    tri_side[triangle[1]].clone(),
                    tri_side[triangle[2]].clone(),
                ];
                let seg = [seg_side[segment[0]].clone(), seg_side[segment[1]].clone()];
                assert!(segment_triangle_intersect(&seg, &tri));
            }
            other => panic!("expected a triangle/segment witness, got {other:?}"),
        }
    }
}
