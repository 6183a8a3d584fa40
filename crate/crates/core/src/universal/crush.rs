//! Contractibility certificates for proximity complexes, by greedy vertex
//! deletion toward a center.
//!
//! Points are processed farthest-from-center first. Deleting a vertex of a
//! clique complex is a homotopy equivalence whenever its link among the
//! remaining vertices is a cone, and in a clique complex the link on a
//! neighbor set N is a cone exactly when some u in N is adjacent to all of
//! N minus u. A full deletion order down to a single point therefore
//! certifies that the complex is contractible. The certificate is purely
//! combinatorial; the center only drives the order (points that survive
//! longest sit nearest the center, which is what makes the apex search
//! succeed on dense samples of star-shaped sets).

use crate::geometry::rational::Rational;
use crate::geometry::metric::squared_distance;
use crate::geometry::Point;
use crate::simplicial::rips::{adjacency_of, BitGraph, VertexSet};
use crate::simplicial::PointCloud;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrushOutcome {
    /// Deletion order (cloud indices, closest to the center last) together
    /// with the link apex that justified each deletion; entry 0 has none.
    Complete {
        order: Vec<usize>,
        apices: Vec<Option<usize>>,
    },
    /// No apex exists at position `failed_at` of the order (the vertex
    /// deleted at that step has a non-cone link).
    Blocked { failed_at: usize },
}

impl CrushOutcome {
    pub fn is_complete(&self) -> bool {
        matches!(self, CrushOutcome::Complete { .. })
    }
}

/// Certify that the cloud's proximity complex at its own scale collapses
/// to a point, ordering by distance to `center`.
pub fn crush_collapse(cloud: &PointCloud, center: &Point) -> CrushOutcome {
    assert!(!cloud.is_empty(), "nothing to crush");
    let ids: Vec<usize> = (0..cloud.len()).collect();
    let graph = adjacency_of(cloud, &ids);
    let dists: Vec<Rational> = cloud
        .points()
        .iter()
        .map(|p| squared_distance(center, p))
        .collect();
    crush_on(&graph, &ids, &dists)
}

/// Shared engine: crush the subgraph induced on `members` of a prebuilt
/// adjacency structure. `dists` is indexed by graph vertex; only member
/// entries are read. Returned indices are graph vertices.
pub(crate) fn crush_on(
    graph: &BitGraph,
    members: &[usize],
    dists: &[Rational],
) -> CrushOutcome {
    assert!(!members.is_empty(), "nothing to crush");
    let mut order: Vec<usize> = members.to_vec();
    order.sort_by(|&a, &b| dists[a].cmp(&dists[b]).then(a.cmp(&b)));
    let words = graph.n().div_ceil(64);
    let mut active = VertexSet::empty(words);
    for &v in &order {
        active.insert(v);
    }
    let mut apices: Vec<Option<usize>> = vec![None; order.len()];
    for i in (1..order.len()).rev() {
        let x = order[i];
        active.remove(x);
        let nbrs = active.and_row(graph.row(x));
        if nbrs.is_empty() {
            return CrushOutcome::Blocked { failed_at: i };
        }
        let need = nbrs.len() - 1;
        // candidates nearest the center first: the survivor side of the
        // neighborhood is where cone apices live
        let apex = order[..i]
            .iter()
            .copied()
            .filter(|&u| nbrs.contains(u))
            .find(|&u| nbrs.intersection_size(graph.row(u)) >= need);
        match apex {
            Some(u) => apices[i] = Some(u),
            None => return CrushOutcome::Blocked { failed_at: i },
        }
    }
    CrushOutcome::Complete { order, apices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;
    use crate::geometry::Metric;

    fn cloud_1d(xs: &[(i64, i64)], scale: (i64, i64)) -> PointCloud {
        let points = xs.iter().map(|&(n, d)| Point::new(vec![rat(n, d)])).collect();
        PointCloud::new(points, rat(scale.0, scale.1), true, Metric::Euclidean)
    }

    #[test]
    fn dense_segment_crushes_completely() {
        let xs: Vec<(i64, i64)> = (0..=20).map(|i| (i, 20)).collect();
        let cloud = cloud_1d(&xs, (3, 10));
        let outcome = crush_collapse(&cloud, &Point::new(vec![rat(1, 2)]));
        match outcome {
            CrushOutcome::Complete { order, apices } => {
                assert_eq!(order.len(), 21);
                // the survivor is the sample nearest the center
                assert_eq!(order[0], 10);
                assert!(apices[0].is_none());
                assert!(apices[1..].iter().all(Option::is_some));
            }
            CrushOutcome::Blocked { failed_at } => panic!("blocked at {failed_at}"),
        }
    }

    #[test]
    fn split_clusters_block_at_the_gap() {
        // two components: the far cluster's last survivor has no neighbors
        let cloud = cloud_1d(&[(0, 1), (1, 10), (2, 10), (8, 1), (81, 10)], (1, 2));
        let outcome = crush_collapse(&cloud, &Point::new(vec![rat(0, 1)]));
        assert!(matches!(outcome, CrushOutcome::Blocked { .. }));
    }

    #[test]
    fn sparse_ring_blocks_on_its_cycle() {
        // 12 points on a circle, scale reaching one step but not two:
        // every deletion faces a two-vertex link with no edge between
        let mut points = Vec::new();
        for i in 0..12 {
            let angle = std::f64::consts::TAU * i as f64 / 12.0;
            points.push(Point::new(vec![
                crate::geometry::rational::approx_rational(angle.cos(), 1000),
                crate::geometry::rational::approx_rational(angle.sin(), 1000),
            ]));
        }
        let cloud = PointCloud::new(points, rat(3, 5), true, Metric::Euclidean);
        let outcome = crush_collapse(&cloud, &Point::origin(2));
        assert!(matches!(outcome, CrushOutcome::Blocked { .. }));
    }

    #[test]
    fn dense_star_shaped_polygon_grid_crushes() {
        // plus-shaped region: union of a horizontal and a vertical bar,
        // star-shaped around the origin; eighth-step grid, scale 3/4
        let mut seen = std::collections::BTreeSet::new();
        for i in -8i64..=8 {
            for j in -2i64..=2 {
                seen.insert(vec![rat(i, 4), rat(j, 4)]);
                if i.abs() > 2 {
                    seen.insert(vec![rat(j, 4), rat(i, 4)]);
                }
            }
        }
        let points: Vec<Point> = seen.into_iter().map(Point::new).collect();
        let cloud = PointCloud::new(points, rat(3, 4), true, Metric::Euclidean);
        let outcome = crush_collapse(&cloud, &Point::origin(2));
        assert!(outcome.is_complete(), "{outcome:?}");
    }

    #[test]
    fn single_point_is_already_crushed() {
        let cloud = cloud_1d(&[(7, 1)], (1, 1));
        let outcome = crush_collapse(&cloud, &Point::new(vec![rat(0, 1)]));
        match outcome {
            CrushOutcome::Complete { order, apices } => {
                assert_eq!(order, vec![0]);
                assert_eq!(apices, vec![None]);
            }
            _ => panic!("single points crush trivially"),
        }
    }
}
