//! Nerve of the convex cover, built incrementally with exact multi-hull LPs.

use super::pieces::{shadow_pieces, ConvexPiece};
use crate::geometry::hull::hulls_common_point;
use crate::geometry::Point;
use crate::homology::homology;
use crate::simplicial::{PointCloud, SimplicialComplex};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// A convex cover together with its nerve, truncated at a dimension cap.
///
/// Since every intersection of pieces is convex, the nerve has the homotopy
/// type of the union up to the cap: homology in degree k is trustworthy
/// whenever the nerve carries faces up to dimension k + 1.
#[derive(Debug, Clone)]
pub struct CoverNerve {
    pub pieces: Vec<ConvexPiece>,
    pub nerve: SimplicialComplex,
}

/// Exact test for one point common to every listed hull.
///
/// Short-circuits: a generator shared by all pieces is such a point, and an
/// empty bounding-box intersection certifies there is none. Only the
/// remaining cases pay for a feasibility LP.
pub fn multi_hull_common_point(pieces: &[&ConvexPiece]) -> bool {
    assert!(!pieces.is_empty(), "empty piece list");
    if pieces.len() == 1 || ConvexPiece::share_generator(pieces) {
        return true;
    }
    let mut bb = pieces[0].bbox().clone();
    for p in &pieces[1..] {
        match bb.intersect(p.bbox()) {
            Some(x) => bb = x,
            None => return false,
        }
    }
    let hulls: Vec<&[Point]> = pieces.iter().map(|p| p.points()).collect();
    hulls_common_point(&hulls)
}

/// Nerve faces up to dimension `q` by level-wise expansion: a candidate
/// (k+1)-set is tested only when all its k-subsets are already faces, and the
/// candidate LPs of one level run in parallel in a fixed order.
pub fn nerve(pieces: Vec<ConvexPiece>, q: usize) -> CoverNerve {
    let n = pieces.len();
    let mut current: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut all_faces = current.clone();
    for level in 1..=q {
        if current.is_empty() {
            break;
        }
        let known: BTreeSet<&[usize]> = current.iter().map(Vec::as_slice).collect();
        let mut candidates = Vec::new();
        for f in &current {
            'next: for v in f[f.len() - 1] + 1..n {
                let mut g = f.clone();
                g.push(v);
                if level >= 2 {
                    // the subset omitting v is f itself
                    let mut sub = Vec::with_capacity(g.len() - 1);
                    for omit in 0..g.len() - 1 {
                        sub.clear();
                        sub.extend(g.iter().filter(|&&x| x != g[omit]).copied());
                        if !known.contains(sub.as_slice()) {
                            continue 'next;
                        }
                    }
                }
                candidates.push(g);
            }
        }
        let keep: Vec<bool> = candidates
            .par_iter()
            .map(|g| {
                let refs: Vec<&ConvexPiece> = g.iter().map(|&i| &pieces[i]).collect();
                multi_hull_common_point(&refs)
            })
            .collect();
        current = candidates
            .into_iter()
            .zip(keep)
            .filter_map(|(g, ok)| ok.then_some(g))
            .collect();
        all_faces.extend_from_slice(&current);
    }
    CoverNerve {
        pieces,
        nerve: SimplicialComplex::from_faces(all_faces),
    }
}

/// Betti numbers of the shadow in degrees `0..=up_to`, through the nerve of
/// the maximal-face cover with faces to dimension `up_to + 1`.
pub fn shadow_betti(cloud: &PointCloud, up_to: usize) -> Vec<usize> {
    if let Some(d) = cloud.dim() {
        assert!(up_to <= d, "degree beyond ambient dimension");
    }
    let cover = nerve(shadow_pieces(cloud), up_to + 1);
    homology(&cover.nerve, up_to).betti
}
