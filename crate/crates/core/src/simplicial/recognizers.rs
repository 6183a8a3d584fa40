//! Combinatorial recognizers: normal pseudomanifolds and closed surfaces.

use std::fmt;

use super::complex::SimplicialComplex;

/// A reason a complex fails to be a normal pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmViolation {
    Empty,
    /// A maximal face below the top dimension.
    NotPure { face: Vec<usize> },
    Disconnected,
    /// A codimension-1 face with a cofacet count other than two.
    RidgeCofacets { ridge: Vec<usize>, count: usize },
    /// A face of dimension at most `dim - 2` with a disconnected link.
    DisconnectedLink { face: Vec<usize> },
}

impl fmt::Display for PmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PmViolation::Empty => write!(f, "empty complex"),
            PmViolation::NotPure { face } => write!(f, "maximal face {face:?} below top dimension"),
            PmViolation::Disconnected => write!(f, "complex is disconnected"),
            PmViolation::RidgeCofacets { ridge, count } => {
                write!(f, "ridge {ridge:?} has {count} cofacets instead of 2")
            }
            PmViolation::DisconnectedLink { face } => {
                write!(f, "link of {face:?} is disconnected")
            }
        }
    }
}

/// Result of the normal-pseudomanifold check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    pub is_pseudomanifold: bool,
    pub dim: Option<usize>,
    pub violations: Vec<PmViolation>,
}

/// Check the normal pseudomanifold conditions in dimension `d = dim K`:
/// purity, connectivity, exactly two top faces on every `(d-1)`-face, and
/// connected links for all faces of dimension at most `d - 2`. Dimension 0
/// is special: the only normal 0-pseudomanifold is the two-point complex.
pub fn pseudomanifold_report(k: &SimplicialComplex) -> PseudomanifoldReport {
    let mut violations = Vec::new();
    let Some(d) = k.dim() else {
        return PseudomanifoldReport {
            is_pseudomanifold: false,
            dim: None,
            violations: vec![PmViolation::Empty],
        };
    };
    if d == 0 {
        let ok = k.vertices().len() == 2;
        if !ok {
            violations.push(PmViolation::RidgeCofacets {
                ridge: Vec::new(),
                count: k.vertices().len(),
            });
        }
        return PseudomanifoldReport { is_pseudomanifold: ok, dim: Some(0), violations };
    }
    for m in k.maximal_faces() {
        if m.len() != d + 1 {
            violations.push(PmViolation::NotPure { face: m.clone() });
        }
    }
    if !k.is_connected() {
        violations.push(PmViolation::Disconnected);
    }
    for ridge in k.faces_of_dim(d - 1) {
        let count = k
            .faces_of_dim(d)
            .iter()
            .filter(|top| super::complex::is_subset(&ridge, top))
            .count();
        if count != 2 {
            violations.push(PmViolation::RidgeCofacets { ridge, count });
        }
    }
    if d >= 2 {
        for low in 0..=(d - 2) {
            for face in k.faces_of_dim(low) {
                if !k.link_of_face(&face).is_connected() {
                    violations.push(PmViolation::DisconnectedLink { face });
                }
            }
        }
    }
    PseudomanifoldReport {
        is_pseudomanifold: violations.is_empty(),
        dim: Some(d),
        violations,
    }
}

/// Is the complex a single cycle (connected, every vertex in exactly two
/// edges, nothing above dimension 1, at least three vertices)?
pub fn is_single_cycle(k: &SimplicialComplex) -> bool {
    if k.dim() != Some(1) || k.vertices().len() < 3 || !k.is_connected() {
        return false;
    }
    let edges = k.edges();
    if k.maximal_faces().len() != edges.len() {
        return false; // an isolated vertex hides among the maximal faces
    }
    let mut degree = std::collections::BTreeMap::new();
    for (a, b) in &edges {
        *degree.entry(*a).or_insert(0usize) += 1;
        *degree.entry(*b).or_insert(0usize) += 1;
    }
    k.vertices().iter().all(|v| degree.get(v) == Some(&2))
}

/// Closed-surface test: pure of dimension 2, connected, every edge in
/// exactly two triangles, and every vertex link a single cycle.
pub fn is_closed_surface(k: &SimplicialComplex) -> bool {
    if k.dim() != Some(2) {
        return false;
    }
    if k.maximal_faces().iter().any(|m| m.len() != 3) {
        return false;
    }
    if !k.is_connected() {
        return false;
    }
    let triangles = k.faces_of_dim(2);
    for edge in k.faces_of_dim(1) {
        let count = triangles
            .iter()
            .filter(|t| super::complex::is_subset(&edge, t))
            .count();
        if count != 2 {
            return false;
        }
    }
    k.vertices().iter().all(|&v| is_single_cycle(&k.link(v)))
}

/// The 7-vertex torus triangulation. A handy closed-surface fixture that is
/// not a sphere: every pair of vertices is an edge.
pub fn seven_vertex_torus() -> SimplicialComplex {
    let faces: [[usize; 3]; 14] = [
        [0, 1, 3],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 0],
        [5, 6, 1],
        [6, 0, 2],
        [0, 3, 2],
        [1, 4, 3],
        [2, 5, 4],
        [3, 6, 5],
        [4, 0, 6],
        [5, 1, 0],
        [6, 2, 1],
    ];
    SimplicialComplex::from_faces(faces.iter().map(|f| f.to_vec()))
}

/// The 6-vertex projective plane (icosahedron with antipodal vertices glued).
/// Closed non-orientable surface; the standard 2-torsion fixture.
pub fn six_vertex_projective_plane() -> SimplicialComplex {
    let faces: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ];
    SimplicialComplex::from_faces(faces.iter().map(|f| f.to_vec()))
}

/// The icosahedron boundary: a flag closed surface whose vertex links are
/// 5-cycles rather than 4-cycles. 12 vertices, 30 edges, 20 triangles.
pub fn icosahedron_boundary() -> SimplicialComplex {
    let faces: [[usize; 3]; 20] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 6],
        [2, 3, 7],
        [3, 4, 8],
        [4, 5, 9],
        [5, 1, 10],
        [2, 6, 7],
        [3, 7, 8],
        [4, 8, 9],
        [5, 9, 10],
        [1, 10, 6],
        [6, 7, 11],
        [7, 8, 11],
        [8, 9, 11],
        [9, 10, 11],
        [10, 6, 11],
    ];
    SimplicialComplex::from_faces(faces.iter().map(|f| f.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::crosspolytope::crosspolytope;

    #[test]
    fn crosspolytopes_are_normal_pseudomanifolds() {
        for d in 1..=3 {
            let r = pseudomanifold_report(&crosspolytope(d));
            assert!(r.is_pseudomanifold, "dimension {d}: {:?}", r.violations);
            assert_eq!(r.dim, Some(d));
        }
    }

    #[test]
    fn two_points_are_the_only_zero_dimensional_case() {
        assert!(pseudomanifold_report(&crosspolytope(0)).is_pseudomanifold);
        let three = SimplicialComplex::from_faces([vec![0], vec![1], vec![2]]);
        assert!(!pseudomanifold_report(&three).is_pseudomanifold);
    }

    #[test]
    fn pinched_vertex_fails_link_connectivity() {
        let pinched = SimplicialComplex::from_faces([vec![0, 1, 2], vec![0, 3, 4]]);
        let r = pseudomanifold_report(&pinched);
        assert!(!r.is_pseudomanifold);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, PmViolation::DisconnectedLink { face } if face == &vec![0])));
    }

    #[test]
    fn boundary_edges_fail_the_ridge_count() {
        let two = SimplicialComplex::from_faces([vec![0, 1, 2], vec![1, 2, 3]]);
        let r = pseudomanifold_report(&two);
        assert!(!r.is_pseudomanifold);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, PmViolation::RidgeCofacets { count: 1, .. })));
        assert!(!is_closed_surface(&two));
    }

    #[test]
    fn impure_complex_is_flagged() {
        let k = SimplicialComplex::from_faces([vec![0, 1, 2], vec![3, 4]]);
        let r = pseudomanifold_report(&k);
        assert!(r.violations.iter().any(|v| matches!(v, PmViolation::NotPure { .. })));
    }

    #[test]
    fn octahedron_and_torus_are_closed_surfaces() {
        assert!(is_closed_surface(&crosspolytope(2)));
        let t = seven_vertex_torus();
        assert!(is_closed_surface(&t));
        let r = pseudomanifold_report(&t);
        assert!(r.is_pseudomanifold);
        assert_eq!(r.dim, Some(2));
        assert_eq!(t.f_vector(), vec![7, 21, 14]);
    }

    #[test]
    fn projective_plane_is_a_closed_surface_on_the_complete_graph() {
        let p = six_vertex_projective_plane();
        assert_eq!(p.f_vector(), vec![6, 15, 10]);
        assert!(is_closed_surface(&p));
        assert!(pseudomanifold_report(&p).is_pseudomanifold);
    }

    #[test]
    fn icosahedron_is_a_closed_surface_with_five_cycle_links() {
        let ico = icosahedron_boundary();
        assert_eq!(ico.f_vector(), vec![12, 30, 20]);
        assert!(is_closed_surface(&ico));
        for &v in ico.vertices() {
            let link = ico.link(v);
            assert!(is_single_cycle(&link));
            assert_eq!(link.vertices().len(), 5);
        }
    }

    #[test]
    fn cycles_are_pseudomanifolds_of_dimension_one() {
        let c5 = SimplicialComplex::from_faces(
            (0..5).map(|i| vec![i, (i + 1) % 5]).collect::<Vec<_>>(),
        );
        assert!(is_single_cycle(&c5));
        let r = pseudomanifold_report(&c5);
        assert!(r.is_pseudomanifold);
        assert_eq!(r.dim, Some(1));
        // A path is not: endpoints have one cofacet.
        let path = SimplicialComplex::from_faces([vec![0, 1], vec![1, 2]]);
        assert!(!pseudomanifold_report(&path).is_pseudomanifold);
        assert!(!is_single_cycle(&path));
    }
}
