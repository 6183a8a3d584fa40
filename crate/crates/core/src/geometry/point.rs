//! Points with exact rational coordinates.

use std::fmt;

use super::rational::{format_rational, rat, Rational};
use num_traits::Zero;

/// A point of Euclidean space with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Point(pairs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&n| rat(n, 1)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    /// Coordinate-wise difference `self - other`. Panics on dimension mismatch.
    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Affine combination `sum of weights[i] * points[i]`.
    /// Panics if the lists disagree in length or the points in dimension.
    pub fn combine(points: &[&Point], weights: &[Rational]) -> Point {
        assert_eq!(points.len(), weights.len());
        assert!(!points.is_empty(), "empty affine combination");
        let dim = points[0].dim();
        let mut out = vec![Rational::zero(); dim];
        for (p, w) in points.iter().zip(weights) {
            assert_eq!(p.dim(), dim, "dimension mismatch");
            for (acc, c) in out.iter_mut().zip(p.coords()) {
                *acc += w * c;
            }
        }
        Point(out)
    }

    /// Barycenter of a nonempty list of points.
    pub fn barycenter(points: &[&Point]) -> Point {
        let w = rat(1, points.len() as i64);
        let weights = vec![w; points.len()];
        Point::combine(points, &weights)
    }
}

fn fmt_point(p: &Point, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in p.0.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{}", format_rational(c))?;
    }
    write!(f, ")")
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_point(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_point(self, f)
    }
}
