//! Boundary complexes of crosspolytopes and their recognition.

use super::complex::SimplicialComplex;
use super::rips::{maximal_cliques, BitGraph};

/// Boundary complex of the `(d+1)`-dimensional crosspolytope: `2(d+1)`
/// vertices in antipodal pairs `(2i, 2i+1)`, faces exactly the vertex sets
/// containing no antipodal pair. `d = 0` gives two points, `d = 1` the
/// 4-cycle, `d = 2` the octahedron boundary.
pub fn crosspolytope(d: usize) -> SimplicialComplex {
    let pairs = d + 1;
    let mut faces = Vec::new();
    // One vertex from each pair: 2^(d+1) top faces of dimension d.
    for mask in 0u64..(1 << pairs) {
        let face: Vec<usize> = (0..pairs)
            .map(|i| 2 * i + ((mask >> i) & 1) as usize)
            .collect();
        faces.push(face);
    }
    SimplicialComplex::from_faces(faces)
}

/// If `k` is combinatorially isomorphic to the boundary of a crosspolytope,
/// return its dimension.
///
/// No general isomorphism search is needed: a complex is a crosspolytope
/// boundary exactly when its 1-skeleton is a complete graph minus a perfect
/// matching and the complex is the clique complex of that skeleton. Both
/// conditions are direct checks.
pub fn crosspolytope_dimension(k: &SimplicialComplex) -> Option<usize> {
    let verts = k.vertices();
    let n = verts.len();
    if n == 0 || n % 2 != 0 {
        return None;
    }
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let mut g = BitGraph::new(n);
    for (a, b) in k.edges() {
        g.add_edge(index(a), index(b));
    }
    // Complement must be a perfect matching: every vertex misses exactly one.
    for i in 0..n {
        if g.degree(i) != n - 2 {
            return None;
        }
    }
    // Flagness: the clique complex of the skeleton must be k itself.
    let cliques = maximal_cliques(&g);
    let flag = SimplicialComplex::from_faces(
        cliques
            .into_iter()
            .map(|c| c.into_iter().map(|p| verts[p]).collect()),
    );
    if &flag == k {
        Some(n / 2 - 1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_crosspolytopes() {
        assert_eq!(crosspolytope(0).maximal_faces(), &[vec![0], vec![1]]);
        assert_eq!(crosspolytope(1).f_vector(), vec![4, 4]);
        assert_eq!(crosspolytope(2).f_vector(), vec![6, 12, 8]);
        assert_eq!(crosspolytope(3).f_vector(), vec![8, 24, 32, 16]);
    }

    #[test]
    fn face_counts_follow_the_binomial_pattern() {
        // Dimension-k faces: choose k+1 pairs, then one vertex from each.
        let d = 4;
        let k = crosspolytope(d);
        let f = k.f_vector();
        for (i, &count) in f.iter().enumerate() {
            let choose = |n: usize, r: usize| -> usize {
                let mut acc = 1usize;
                for t in 0..r {
                    acc = acc * (n - t) / (t + 1);
                }
                acc
            };
            assert_eq!(count, choose(d + 1, i + 1) << (i + 1));
        }
    }

    #[test]
    fn suspension_ladder() {
        for d in 1..=3 {
            let lower = crosspolytope(d - 1);
            let expect = crosspolytope(d);
            // Fresh vertices 2d, 2d+1 complete the antipodal pair list.
            assert_eq!(lower.suspension(2 * d, 2 * d + 1), expect);
        }
    }

    #[test]
    fn recognition_round_trip() {
        for d in 0..=5 {
            assert_eq!(crosspolytope_dimension(&crosspolytope(d)), Some(d));
        }
    }

    #[test]
    fn near_misses_are_rejected() {
        // 4-cycle with a chord: complement is not a perfect matching.
        let chord = SimplicialComplex::from_faces([vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![0, 2]]);
        assert_eq!(crosspolytope_dimension(&chord), None);
        // Correct skeleton, wrong faces: octahedron skeleton without its triangles.
        let skel = SimplicialComplex::from_faces(crosspolytope(2).faces_of_dim(1));
        assert_eq!(crosspolytope_dimension(&skel), None);
        // Odd vertex count.
        let tri = SimplicialComplex::from_faces([vec![0, 1, 2]]);
        assert_eq!(crosspolytope_dimension(&tri), None);
        // A simplex: complement empty, not a matching.
        let quad = SimplicialComplex::from_faces([vec![0, 1, 2, 3]]);
        assert_eq!(crosspolytope_dimension(&quad), None);
    }

    #[test]
    fn recognition_is_label_independent() {
        let k = crosspolytope(2);
        let relabeled = SimplicialComplex::from_faces(
            k.maximal_faces()
                .iter()
                .map(|f| f.iter().map(|&v| v * 7 + 100).collect()),
        );
        assert_eq!(crosspolytope_dimension(&relabeled), Some(2));
    }
}
