//! Convex hull membership and intersection, decided by exact feasibility LPs.

use super::lp::{self, LinearSystem};
use super::point::Point;
use super::rational::Rational;
use num_traits::{One, Zero};

/// Axis-aligned bounding box. Used as a cheap certain-negative prefilter in
/// front of the LP predicates: disjoint boxes imply disjoint hulls, while
/// overlapping boxes decide nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aabb {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

impl Aabb {
    pub fn of_points<'a, I>(points: I) -> Option<Aabb>
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for p in it {
            assert_eq!(p.dim(), lo.len(), "dimension mismatch");
            for (i, c) in p.coords().iter().enumerate() {
                if c < &lo[i] {
                    lo[i] = c.clone();
                }
                if c > &hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        Some(Aabb { lo, hi })
    }

    pub fn intersect(&self, other: &Aabb) -> Option<Aabb> {
        assert_eq!(self.lo.len(), other.lo.len());
        let mut lo = Vec::with_capacity(self.lo.len());
        let mut hi = Vec::with_capacity(self.lo.len());
        for i in 0..self.lo.len() {
            let l = self.lo[i].clone().max(other.lo[i].clone());
            let h = self.hi[i].clone().min(other.hi[i].clone());
            if l > h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        Some(Aabb { lo, hi })
    }

    pub fn disjoint_from(&self, other: &Aabb) -> bool {
        self.intersect(other).is_none()
    }

    pub fn contains(&self, p: &Point) -> bool {
        assert_eq!(p.dim(), self.lo.len(), "dimension mismatch");
        p.coords()
            .iter()
            .enumerate()
            .all(|(i, c)| &self.lo[i] <= c && c <= &self.hi[i])
    }
}

fn common_point_lp(hulls: &[&[Point]]) -> LinearSystem {
    assert!(!hulls.is_empty());
    for h in hulls {
        assert!(!h.is_empty(), "hull with no generators");
    }
    let dim = hulls[0][0].dim();
    for h in hulls {
        for p in *h {
            assert_eq!(p.dim(), dim, "dimension mismatch");
        }
    }
    let nvars: usize = hulls.iter().map(|h| h.len()).sum();
    let offset: Vec<usize> = hulls
        .iter()
        .scan(0usize, |acc, h| {
            let o = *acc;
            *acc += h.len();
            Some(o)
        })
        .collect();
    let mut sys = LinearSystem::new(nvars);
    // Each later hull's combination matches hull 0's, coordinate by coordinate.
    for j in 1..hulls.len() {
        for d in 0..dim {
            let mut row = vec![Rational::zero(); nvars];
            for (i, p) in hulls[0].iter().enumerate() {
                row[offset[0] + i] = p.coord(d).clone();
            }
            for (i, p) in hulls[j].iter().enumerate() {
                row[offset[j] + i] = -p.coord(d);
            }
            sys.push_row(row, Rational::zero());
        }
    }
    for (j, h) in hulls.iter().enumerate() {
        let mut row = vec![Rational::zero(); nvars];
        for i in 0..h.len() {
            row[offset[j] + i] = Rational::one();
        }
        sys.push_row(row, Rational::one());
    }
    sys
}

/// Do the convex hulls of all the generator lists share a point?
pub fn hulls_common_point(hulls: &[&[Point]]) -> bool {
    lp::feasible(&common_point_lp(hulls))
}

/// A shared point of all the hulls, if one exists.
pub fn hulls_common_point_witness(hulls: &[&[Point]]) -> Option<Point> {
    let sys = common_point_lp(hulls);
    let x = lp::feasible_point(&sys)?;
    let gens: Vec<&Point> = hulls[0].iter().collect();
    Some(Point::combine(&gens, &x[..hulls[0].len()]))
}

/// Do `conv(a)` and `conv(b)` intersect?
pub fn hulls_intersect(a: &[Point], b: &[Point]) -> bool {
    hulls_common_point(&[a, b])
}

/// Is `x` in the convex hull of `gens`?
pub fn hull_contains(gens: &[Point], x: &Point) -> bool {
    assert!(!gens.is_empty(), "hull with no generators");
    let dim = x.dim();
    let mut sys = LinearSystem::new(gens.len());
    for d in 0..dim {
        let row = gens.iter().map(|g| g.coord(d).clone()).collect();
        sys.push_row(row, x.coord(d).clone());
    }
    sys.push_row(vec![Rational::one(); gens.len()], Rational::one());
    lp::feasible(&sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    fn tri() -> Vec<Point> {
        vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[0, 2]),
        ]
    }

    #[test]
    fn triangle_membership() {
        let t = tri();
        assert!(hull_contains(&t, &Point::from_pairs(&[(1, 2), (1, 2)])));
        assert!(hull_contains(&t, &Point::from_ints(&[1, 1]))); // on the hypotenuse
        assert!(hull_contains(&t, &Point::from_ints(&[0, 0]))); // a vertex
        assert!(!hull_contains(&t, &Point::from_ints(&[2, 2])));
        assert!(!hull_contains(&t, &Point::from_pairs(&[(-1, 100), (0, 1)])));
    }

    #[test]
    fn crossing_segments_intersect() {
        let a = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[2, 2])];
        let b = vec![Point::from_ints(&[0, 2]), Point::from_ints(&[2, 0])];
        assert!(hulls_intersect(&a, &b));
        let c = vec![Point::from_ints(&[3, 0]), Point::from_ints(&[4, 0])];
        assert!(!hulls_intersect(&a, &c));
    }

    #[test]
    fn touching_at_a_single_point_counts() {
        let a = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])];
        let b = vec![Point::from_ints(&[1, 0]), Point::from_ints(&[2, 0])];
        assert!(hulls_intersect(&a, &b));
    }

    #[test]
    fn three_way_common_point() {
        let t = tri();
        let seg1 = vec![Point::from_ints(&[0, 1]), Point::from_ints(&[2, 1])];
        let seg2 = vec![Point::from_ints(&[1, 0]), Point::from_ints(&[1, 2])];
        assert!(hulls_common_point(&[&t, &seg1, &seg2]));
        let far = vec![Point::from_ints(&[5, 5])];
        assert!(!hulls_common_point(&[&t, &seg1, &far]));
        // Pairwise intersections without a three-way common point.
        let a = vec![Point::from_ints(&[0, 0]), Point::from_ints(&[4, 0])];
        let b = vec![Point::from_ints(&[0, 1]), Point::from_ints(&[4, 1])];
        let c = vec![Point::from_ints(&[0, 2]), Point::from_ints(&[4, 2])];
        assert!(!hulls_common_point(&[&a, &b, &c]));
        assert!(hulls_common_point(&[&a, &a, &a]));
    }

    #[test]
    fn witness_is_a_true_common_point() {
        let t = tri();
        let seg = vec![Point::from_ints(&[1, -1]), Point::from_ints(&[1, 3])];
        let w = hulls_common_point_witness(&[&t, &seg]).unwrap();
        assert!(hull_contains(&t, &w));
        assert!(hull_contains(&seg, &w));
        assert_eq!(w.coord(0), &rat(1, 1));
    }

    #[test]
    fn aabb_prefilter_agrees_on_disjointness() {
        let a = Aabb::of_points(&tri()).unwrap();
        let far = vec![Point::from_ints(&[3, 3]), Point::from_ints(&[4, 4])];
        let b = Aabb::of_points(&far).unwrap();
        assert!(a.disjoint_from(&b));
        let near = vec![Point::from_ints(&[1, 1]), Point::from_ints(&[4, 4])];
        let c = Aabb::of_points(&near).unwrap();
        assert!(!a.disjoint_from(&c));
        assert!(Aabb::of_points(std::iter::empty::<&Point>()).is_none());
    }
}
