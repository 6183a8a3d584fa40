//! Exact distance comparisons.
//!
//! No distance is ever evaluated as a number: every comparison against a
//! rational threshold is decided exactly from squared quantities, including
//! the mixed L1-by-L2 product metric, whose comparison needs one sign-guarded
//! squaring step rather than a square root.

use super::point::Point;
use super::rational::Rational;
use num_traits::{Signed, Zero};

/// Metric to compare point pairs under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Standard Euclidean distance.
    Euclidean,
    /// `d((a,x), (b,y)) = |a-b| + ||x-y||` on a product `R^split x R^(d-split)`:
    /// L1 on the first `split` coordinates, L2 on the rest.
    ProductL1xL2 { split: usize },
}

impl Metric {
    /// The product metric used by the lifted counterexample configurations:
    /// first coordinate L1, remaining coordinates L2.
    pub fn product_line_by_plane() -> Self {
        Metric::ProductL1xL2 { split: 1 }
    }

    pub fn check_dim(&self, dim: usize) {
        if let Metric::ProductL1xL2 { split } = self {
            assert!(
                *split >= 1 && *split < dim,
                "product metric split {split} invalid for dimension {dim}"
            );
        }
    }

    /// Decide `d(p, q) < r` (strict) or `d(p, q) <= r` exactly.
    pub fn within(&self, p: &Point, q: &Point, r: &Rational, strict: bool) -> bool {
        assert_eq!(p.dim(), q.dim(), "dimension mismatch");
        self.check_dim(p.dim());
        match self {
            Metric::Euclidean => {
                let d2 = squared_distance(p, q);
                let r2 = r * r;
                if strict {
                    d2 < r2
                } else {
                    d2 <= r2
                }
            }
            Metric::ProductL1xL2 { split } => {
                let split = *split;
                let mut l1 = Rational::zero();
                for i in 0..split {
                    l1 += (p.coord(i) - q.coord(i)).abs();
                }
                // d = l1 + sqrt(s2) compared to r: move l1 across and square.
                let rem = r - &l1;
                let mut s2 = Rational::zero();
                for i in split..p.dim() {
                    let d = p.coord(i) - q.coord(i);
                    s2 += &d * &d;
                }
                if rem.is_negative() {
                    return false;
                }
                let rem2 = &rem * &rem;
                if strict {
                    s2 < rem2
                } else {
                    s2 <= rem2
                }
            }
        }
    }
}

/// Exact squared Euclidean distance.
pub fn squared_distance(p: &Point, q: &Point) -> Rational {
    assert_eq!(p.dim(), q.dim(), "dimension mismatch");
    let mut acc = Rational::zero();
    for (a, b) in p.coords().iter().zip(q.coords()) {
        let d = a - b;
        acc += &d * &d;
    }
    acc
}

/// Decide whether every pair from `points` is within `r` under `metric`.
pub fn diameter_within(points: &[&Point], r: &Rational, strict: bool, metric: &Metric) -> bool {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if !metric.within(points[i], points[j], r, strict) {
                return false;
            }
        }
    }
    true
}
