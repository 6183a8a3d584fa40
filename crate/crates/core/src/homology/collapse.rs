//! Elementary collapses of complexes of dimension at most 2, and the
//! counting shortcut they unlock for homology of large samples.

use super::{smith_normal_form, HomologyProfile};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

/// Explicit vertex/edge/triangle lists of a complex of dimension <= 2.
///
/// Downward closure is maintained by construction and by every collapse step:
/// a triangle's edges and an edge's vertices are always present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSkeleton {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<[usize; 2]>,
    pub triangles: BTreeSet<[usize; 3]>,
}

impl TwoSkeleton {
    pub fn from_complex(k: &crate::simplicial::SimplicialComplex) -> Self {
        assert!(k.dim().is_none_or(|d| d <= 2), "dimension above 2");
        let vertices = k.vertices().iter().copied().collect();
        let edges = k
            .faces_of_dim(1)
            .into_iter()
            .map(|e| [e[0], e[1]])
            .collect();
        let triangles = k
            .faces_of_dim(2)
            .into_iter()
            .map(|t| [t[0], t[1], t[2]])
            .collect();
        TwoSkeleton {
            vertices,
            edges,
            triangles,
        }
    }

    /// Removes free (edge, triangle) pairs, then free (vertex, edge) pairs,
    /// until none remain. Returns the number of pairs removed. The result is
    /// homotopy equivalent to the input, so homology is preserved.
    pub fn collapse(&mut self) -> usize {
        let mut removed = 0;
        let mut cofaces: BTreeMap<[usize; 2], BTreeSet<[usize; 3]>> = BTreeMap::new();
        for &t in &self.triangles {
            for e in tri_edges(t) {
                cofaces.entry(e).or_default().insert(t);
            }
        }
        let mut candidates: BTreeSet<[usize; 2]> = cofaces
            .iter()
            .filter(|(_, ts)| ts.len() == 1)
            .map(|(&e, _)| e)
            .collect();
        while let Some(&e) = candidates.iter().next() {
            candidates.remove(&e);
            let Some(ts) = cofaces.get(&e) else { continue };
            if ts.len() != 1 {
                continue;
            }
            let t = *ts.iter().next().unwrap();
            self.edges.remove(&e);
            self.triangles.remove(&t);
            cofaces.remove(&e);
            removed += 1;
            for other in tri_edges(t) {
                if other == e {
                    continue;
                }
                let set = cofaces.get_mut(&other).unwrap();
                set.remove(&t);
                if set.len() == 1 {
                    candidates.insert(other);
                }
            }
        }
        // With every surviving edge in 0 or >= 2 triangles, a vertex of
        // degree 1 cannot lie in a triangle, so its one edge is free.
        let mut degree: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &[a, b] in &self.edges {
            degree.entry(a).or_default().insert(b);
            degree.entry(b).or_default().insert(a);
        }
        let mut leaves: BTreeSet<usize> = degree
            .iter()
            .filter(|(_, nb)| nb.len() == 1)
            .map(|(&v, _)| v)
            .collect();
        while let Some(&v) = leaves.iter().next() {
            leaves.remove(&v);
            let Some(nb) = degree.get(&v) else { continue };
            if nb.len() != 1 {
                continue;
            }
            let w = *nb.iter().next().unwrap();
            let mut e = [v, w];
            e.sort_unstable();
            // a degree-1 vertex cannot lie in a triangle (its edges would
            // number at least two), so e is maximal
            debug_assert!(!self.triangles.iter().any(|t| tri_edges(*t).contains(&e)));
            self.edges.remove(&e);
            self.vertices.remove(&v);
            degree.remove(&v);
            removed += 1;
            let wn = degree.get_mut(&w).unwrap();
            wn.remove(&v);
            if wn.len() == 1 {
                leaves.insert(w);
            }
        }
        removed
    }

    /// Homology in degrees 0..=2 of the collapsed skeleton.
    ///
    /// When no triangles survive the collapse everything reduces to counting:
    /// rank of the edge boundary is |V| minus the component count. Otherwise
    /// the (typically much smaller) triangle boundary goes through Smith
    /// reduction for the remaining rank and the degree-1 torsion.
    pub fn collapsed_homology(&self) -> HomologyProfile {
        let mut reduced = self.clone();
        reduced.collapse();
        let v = reduced.vertices.len();
        let e = reduced.edges.len();
        let t = reduced.triangles.len();
        let c = reduced.component_count();
        let rank1 = v - c;
        let (rank2, torsion1) = if t == 0 {
            (0, Vec::new())
        } else {
            let edge_index: BTreeMap<[usize; 2], usize> = reduced
                .edges
                .iter()
                .enumerate()
                .map(|(i, &e)| (e, i))
                .collect();
            let mut dense = vec![vec![BigInt::from(0); t]; e];
            for (j, &tri) in reduced.triangles.iter().enumerate() {
                for (e, sign) in tri_boundary(tri) {
                    dense[edge_index[&e]][j] = BigInt::from(sign);
                }
            }
            let form = smith_normal_form(&dense);
            let torsion = form
                .invariant_factors
                .into_iter()
                .filter(|d| !d.is_one())
                .collect();
            (form.rank, torsion)
        };
        HomologyProfile {
            betti: vec![c, e - rank1 - rank2, t - rank2],
            torsion: vec![Vec::new(), torsion1, Vec::new()],
        }
    }

    pub fn component_count(&self) -> usize {
        let ids: Vec<usize> = self.vertices.iter().copied().collect();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &[a, b] in &self.edges {
            let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..ids.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count()
    }

    pub fn face_counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.triangles.len())
    }
}

fn tri_edges([a, b, c]: [usize; 3]) -> [[usize; 2]; 3] {
    [[a, b], [a, c], [b, c]]
}

fn tri_boundary([a, b, c]: [usize; 3]) -> [([usize; 2], i8); 3] {
    // alternating face deletions of the sorted vertex list
    [([b, c], 1), ([a, c], -1), ([a, b], 1)]
}
