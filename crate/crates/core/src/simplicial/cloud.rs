//! Finite point clouds with a proximity scale, and the vertex-centred
//! splitting of a cloud into near set, closed near set, and complement.

use crate::geometry::rational::Rational;
use crate::geometry::{Metric, Point};
use num_traits::Signed;

/// A finite list of rational points together with the scale and strictness
/// that define its proximity graph. Vertex ids are list indices, so
/// coincident points are legal and keep distinct ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCloud {
    points: Vec<Point>,
    scale: Rational,
    strict: bool,
    metric: Metric,
}

impl PointCloud {
    pub fn new(points: Vec<Point>, scale: Rational, strict: bool, metric: Metric) -> Self {
        assert!(scale.is_positive(), "scale must be positive");
        if let Some(first) = points.first() {
            let dim = first.dim();
            assert!(dim >= 1, "points need dimension at least 1");
            for p in &points {
                assert_eq!(p.dim(), dim, "dimension mismatch");
            }
            metric.check_dim(dim);
        }
        PointCloud { points, scale, strict, metric }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(|p| p.dim())
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    /// Same points, different scale.
    pub fn with_scale(&self, scale: Rational) -> Self {
        PointCloud::new(self.points.clone(), scale, self.strict, self.metric)
    }

    /// Are points `i` and `j` within the proximity scale?
    pub fn within(&self, i: usize, j: usize) -> bool {
        self.metric
            .within(&self.points[i], &self.points[j], &self.scale, self.strict)
    }

    /// Sub-cloud of the listed indices, re-indexed from 0 in the given order.
    pub fn restrict(&self, ids: &[usize]) -> PointCloud {
        let points = ids.iter().map(|&i| self.points[i].clone()).collect();
        PointCloud::new(points, self.scale.clone(), self.strict, self.metric)
    }
}

/// Index-level splitting of a cloud at a vertex `v`: the near set (points
/// within scale of `v`, excluding `v`), the closed near set (near set plus
/// `v`), and the complement of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub vertex: usize,
    /// Points within the scale of `v`, excluding `v` itself. Sorted.
    pub near_ids: Vec<usize>,
    /// `near_ids` plus `v`. Sorted.
    pub closed_near_ids: Vec<usize>,
    /// Everything except `v`. Sorted.
    pub rest_ids: Vec<usize>,
}

impl Decomposition {
    pub fn near_cloud(&self, cloud: &PointCloud) -> PointCloud {
        cloud.restrict(&self.near_ids)
    }

    pub fn closed_near_cloud(&self, cloud: &PointCloud) -> PointCloud {
        cloud.restrict(&self.closed_near_ids)
    }

    pub fn rest_cloud(&self, cloud: &PointCloud) -> PointCloud {
        cloud.restrict(&self.rest_ids)
    }
}

/// Split `cloud` at vertex `v`.
pub fn decompose(cloud: &PointCloud, v: usize) -> Decomposition {
    assert!(v < cloud.len(), "vertex {v} out of range");
    let near_ids: Vec<usize> = (0..cloud.len())
        .filter(|&i| i != v && cloud.within(i, v))
        .collect();
    let mut closed_near_ids = near_ids.clone();
    closed_near_ids.push(v);
    closed_near_ids.sort_unstable();
    let rest_ids: Vec<usize> = (0..cloud.len()).filter(|&i| i != v).collect();
    Decomposition { vertex: v, near_ids, closed_near_ids, rest_ids }
}
