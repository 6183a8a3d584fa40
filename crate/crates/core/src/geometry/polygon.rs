//! Simple polygons in the plane: simplicity checking, exact point location,
//! and the search for the single boundary edge visible from an outside point.

use super::point::Point;
use super::rational::Rational;
use crate::error::GeometryError;
use num_traits::{One, Signed, Zero};

fn cross(u: &[Rational], v: &[Rational]) -> Rational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1]
}

/// Sign of the signed area of the triangle `a, b, c`.
fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let s = cross(&b.sub(a), &c.sub(a));
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

/// Is `p` on the closed segment `[a, b]`? Degenerate segments allowed.
fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    (0..2).all(|i| {
        let (lo, hi) = if a.coord(i) <= b.coord(i) {
            (a.coord(i), b.coord(i))
        } else {
            (b.coord(i), a.coord(i))
        };
        lo <= p.coord(i) && p.coord(i) <= hi
    })
}

/// Do the closed segments `[p1, p2]` and `[q1, q2]` share a point?
/// Exact, including collinear overlaps and point segments.
pub fn segments_intersect(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(q1, q2, p1))
        || (d2 == 0 && on_segment(q1, q2, p2))
        || (d3 == 0 && on_segment(p1, p2, q1))
        || (d4 == 0 && on_segment(p1, p2, q2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Outside,
    OnBoundary,
    Inside,
}

fn edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

/// Locate `p` relative to a simple polygon given as its vertex cycle.
/// Interior/exterior decided by exact crossing parity.
pub fn locate_in_polygon(poly: &[Point], p: &Point) -> Containment {
    assert!(poly.len() >= 3, "polygon needs at least 3 vertices");
    for (i, j) in edges(poly.len()) {
        if on_segment(&poly[i], &poly[j], p) {
            return Containment::OnBoundary;
        }
    }
    let mut inside = false;
    for (i, j) in edges(poly.len()) {
        let (a, b) = (&poly[i], &poly[j]);
        if (a.coord(1) > p.coord(1)) == (b.coord(1) > p.coord(1)) {
            continue;
        }
        // Horizontal ray to +x: the edge crosses p's height; compare the
        // crossing abscissa against p.x without dividing.
        let denom = b.coord(1) - a.coord(1);
        let num = (a.coord(0) - p.coord(0)) * &denom
            + (p.coord(1) - a.coord(1)) * (b.coord(0) - a.coord(0));
        if num.is_positive() == denom.is_positive() && !num.is_zero() {
            inside = !inside;
        }
    }
    if inside {
        Containment::Inside
    } else {
        Containment::Outside
    }
}

/// Verify that the vertex cycle bounds a simple polygon: at least three
/// vertices, no repeated consecutive vertex, adjacent edges meeting only at
/// their shared vertex, non-adjacent edges disjoint.
pub fn check_simple_polygon(poly: &[Point]) -> Result<(), GeometryError> {
    let n = poly.len();
    if n < 3 {
        return Err(GeometryError::NonSimplePolygon(format!(
            "only {n} vertices"
        )));
    }
    for p in poly {
        assert_eq!(p.dim(), 2, "polygon vertices must be planar");
    }
    for i in 0..n {
        if poly[i] == poly[(i + 1) % n] {
            return Err(GeometryError::NonSimplePolygon(format!(
                "vertices {i} and {} coincide",
                (i + 1) % n
            )));
        }
    }
    let edge_list: Vec<(usize, usize)> = edges(n).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a0, a1) = edge_list[i];
            let (b0, b1) = edge_list[j];
            let adjacent = a1 == b0 || b1 == a0;
            if adjacent {
                // Shared endpoint is legal; any further overlap is not.
                let (shared, tip_a, tip_b) = if a1 == b0 {
                    (a1, a0, b1)
                } else {
                    (b1, b0, a1)
                };
                if on_segment(&poly[shared], &poly[tip_b], &poly[tip_a])
                    || on_segment(&poly[shared], &poly[tip_a], &poly[tip_b])
                {
                    return Err(GeometryError::NonSimplePolygon(format!(
                        "edges {i} and {j} overlap at vertex {shared}"
                    )));
                }
            } else if segments_intersect(&poly[a0], &poly[a1], &poly[b0], &poly[b1]) {
                return Err(GeometryError::NonSimplePolygon(format!(
                    "edges {i} and {j} cross"
                )));
            }
        }
    }
    Ok(())
}

/// Outcome of the visible-edge search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeVisibility {
    /// Edge `(i, j)` of the cycle is crossed by every sight segment from the
    /// viewpoint to a polygon vertex.
    Edge(usize, usize),
    /// The viewpoint's rays are not all blocked between viewpoint and vertex:
    /// the ray through `vertex` meets `edge` strictly beyond the vertex, so
    /// the single-edge conclusion does not apply.
    HypothesisFailed { vertex: usize, edge: usize },
}

/// For a viewpoint `v` outside (or on the boundary of) a simple polygon,
/// find the edge crossed by every segment from `v` to a polygon vertex.
///
/// The underlying fact requires each ray from `v` through a vertex to leave
/// the boundary no later than that vertex; when some ray meets the boundary
/// strictly beyond its vertex the search is not run and the failure is
/// reported instead. Given the hypothesis, an edge always exists, so the
/// exhaustive scan cannot come up empty.
pub fn visible_edge(poly: &[Point], v: &Point) -> Result<EdgeVisibility, GeometryError> {
    check_simple_polygon(poly)?;
    assert_eq!(v.dim(), 2, "viewpoint must be planar");
    if locate_in_polygon(poly, v) == Containment::Inside {
        return Err(GeometryError::PointInsidePolygon);
    }
    let n = poly.len();
    for (i, p) in poly.iter().enumerate() {
        if p == v {
            continue;
        }
        let d = p.sub(v);
        for (ei, (e0, e1)) in edges(n).enumerate() {
            let (a, b) = (&poly[e0], &poly[e1]);
            let e = b.sub(a);
            let w = a.sub(v);
            let denom = cross(&d, &e);
            if !denom.is_zero() {
                let t = cross(&w, &e) / &denom;
                let s = cross(&w, &d) / &denom;
                if !s.is_negative() && s <= Rational::one() && t > Rational::one() {
                    return Ok(EdgeVisibility::HypothesisFailed { vertex: i, edge: ei });
                }
            } else if cross(&w, &d).is_zero() {
                // Edge collinear with the ray: it reaches beyond the vertex
                // exactly when its farthest parameter exceeds 1.
                let dd = dot(&d, &d);
                let ta = dot(&a.sub(v), &d) / &dd;
                let tb = dot(&b.sub(v), &d) / &dd;
                if ta.max(tb) > Rational::one() {
                    return Ok(EdgeVisibility::HypothesisFailed { vertex: i, edge: ei });
                }
            }
        }
    }
    for (e0, e1) in edges(n) {
        let all_cross = poly
            .iter()
            .all(|p| segments_intersect(v, p, &poly[e0], &poly[e1]));
        if all_cross {
            return Ok(EdgeVisibility::Edge(e0, e1));
        }
    }
    unreachable!("an outside viewpoint with the ray hypothesis always sees one edge");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Point> {
        vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[2, 2]),
            Point::from_ints(&[0, 2]),
        ]
    }

    fn u_shape() -> Vec<Point> {
        [
            (0, 0),
            (3, 0),
            (3, 3),
            (2, 3),
            (2, 1),
            (1, 1),
            (1, 3),
            (0, 3),
        ]
        .iter()
        .map(|&(x, y)| Point::from_ints(&[x, y]))
        .collect()
    }

    #[test]
    fn segment_intersection_cases() {
        let p = |x: i64, y: i64| Point::from_ints(&[x, y]);
        assert!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(segments_intersect(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 5)));
        assert!(segments_intersect(&p(0, 0), &p(4, 0), &p(1, 0), &p(2, 0))); // collinear overlap
        assert!(!segments_intersect(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
        assert!(segments_intersect(&p(1, 1), &p(1, 1), &p(0, 0), &p(2, 2))); // point on segment
        assert!(!segments_intersect(&p(1, 2), &p(1, 2), &p(0, 0), &p(2, 2)));
    }

    #[test]
    fn point_location_in_square_and_notch() {
        let s = square();
        assert_eq!(locate_in_polygon(&s, &Point::from_ints(&[1, 1])), Containment::Inside);
        assert_eq!(locate_in_polygon(&s, &Point::from_ints(&[1, 0])), Containment::OnBoundary);
        assert_eq!(locate_in_polygon(&s, &Point::from_ints(&[3, 1])), Containment::Outside);
        let u = u_shape();
        // The notch between the two prongs is outside.
        assert_eq!(
            locate_in_polygon(&u, &Point::from_pairs(&[(3, 2), (2, 1)])),
            Containment::Outside
        );
        assert_eq!(
            locate_in_polygon(&u, &Point::from_pairs(&[(1, 2), (1, 2)])),
            Containment::Inside
        );
    }

    #[test]
    fn simplicity_detects_crossings_and_overlaps() {
        assert!(check_simple_polygon(&square()).is_ok());
        assert!(check_simple_polygon(&u_shape()).is_ok());
        let bowtie = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 2]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[0, 2]),
        ];
        assert!(check_simple_polygon(&bowtie).is_err());
        let spike = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[1, 0]), // doubles back along the first edge
        ];
        assert!(check_simple_polygon(&spike).is_err());
        assert!(check_simple_polygon(&square()[..2]).is_err());
    }

    #[test]
    fn square_viewpoint_sees_the_near_edge() {
        let s = square();
        let v = Point::from_ints(&[1, -1]);
        assert_eq!(visible_edge(&s, &v).unwrap(), EdgeVisibility::Edge(0, 1));
    }

    #[test]
    fn viewpoint_on_a_vertex_sees_an_incident_edge() {
        let s = square();
        assert_eq!(
            visible_edge(&s, &Point::from_ints(&[0, 0])).unwrap(),
            EdgeVisibility::Edge(0, 1)
        );
    }

    #[test]
    fn inside_viewpoint_is_rejected() {
        let s = square();
        assert!(matches!(
            visible_edge(&s, &Point::from_ints(&[1, 1])),
            Err(GeometryError::PointInsidePolygon)
        ));
    }

    #[test]
    fn ray_reaching_past_a_vertex_fails_the_hypothesis() {
        let u = u_shape();
        let v = Point::from_pairs(&[(1, 2), (4, 1)]);
        // The ray through vertex 3 = (2,3) continues to the right wall.
        assert_eq!(
            visible_edge(&u, &v).unwrap(),
            EdgeVisibility::HypothesisFailed { vertex: 3, edge: 1 }
        );
    }
}
