//! Component-surjectivity check at a vertex: does every component of the
//! overlap between the closed-star shadow and the rest-shadow contain a
//! piece meeting the link shadow?

use crate::geometry::hull::{hulls_common_point, Aabb};
use crate::geometry::Point;
use crate::simplicial::{decompose, rips_complex_on, PointCloud};
use rayon::prelude::*;

/// One nonempty intersection conv(star face) with conv(outside face),
/// identified by its generator faces in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecePair {
    pub star_face: Vec<usize>,
    pub outside_face: Vec<usize>,
}

/// Outcome of the check at one vertex. `pass` holds exactly when every
/// component of the piece graph contains at least one piece that meets the
/// hull of some maximal link face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPi0Report {
    pub vertex: usize,
    pub pieces: Vec<PiecePair>,
    pub components_total: usize,
    pub components_with_link_piece: usize,
    pub pass: bool,
    /// Piece indices of the first failing component, in order.
    pub witness: Option<Vec<usize>>,
}

impl LocalPi0Report {
    pub fn pieces_total(&self) -> usize {
        self.pieces.len()
    }
}

fn sorted_common(lists: &[&[usize]]) -> bool {
    let (first, rest) = lists.split_first().unwrap();
    first
        .iter()
        .any(|g| rest.iter().all(|l| l.binary_search(g).is_ok()))
}

struct FaceData {
    ids: Vec<usize>,
    points: Vec<Point>,
    bbox: Aabb,
}

fn face_data(cloud: &PointCloud, faces: &[Vec<usize>]) -> Vec<FaceData> {
    faces
        .iter()
        .map(|f| {
            let points: Vec<Point> = f.iter().map(|&v| cloud.point(v).clone()).collect();
            let bbox = Aabb::of_points(points.iter()).unwrap();
            FaceData {
                ids: f.clone(),
                points,
                bbox,
            }
        })
        .collect()
}

/// Joint-hull test with the shared-generator and bounding-box shortcuts.
fn hulls_meet(faces: &[&FaceData]) -> bool {
    if sorted_common(&faces.iter().map(|f| f.ids.as_slice()).collect::<Vec<_>>()) {
        return true;
    }
    let mut bb = faces[0].bbox.clone();
    for f in &faces[1..] {
        match bb.intersect(&f.bbox) {
            Some(x) => bb = x,
            None => return false,
        }
    }
    hulls_common_point(&faces.iter().map(|f| f.points.as_slice()).collect::<Vec<_>>())
}

pub fn check_pi0_surjectivity(cloud: &PointCloud, v: usize) -> LocalPi0Report {
    assert!(v < cloud.len(), "vertex {v} out of range");
    let parts = decompose(cloud, v);
    let star = rips_complex_on(cloud, &parts.closed_near_ids, None);
    let rest = rips_complex_on(cloud, &parts.rest_ids, None);
    let link = rips_complex_on(cloud, &parts.near_ids, None);
    let star_faces = face_data(cloud, star.maximal_faces());
    let rest_faces = face_data(cloud, rest.maximal_faces());
    let link_faces = face_data(cloud, link.maximal_faces());

    // nonempty pairwise intersections, in (star, outside) lex order
    let mut piece_refs: Vec<(usize, usize)> = Vec::new();
    for (i, a) in star_faces.iter().enumerate() {
        for (j, b) in rest_faces.iter().enumerate() {
            if hulls_meet(&[a, b]) {
                piece_refs.push((i, j));
            }
        }
    }

    let adjacency: Vec<(usize, usize)> = {
        let mut pairs = Vec::new();
        for p in 0..piece_refs.len() {
            for q in p + 1..piece_refs.len() {
                pairs.push((p, q));
            }
        }
        pairs
            .into_par_iter()
            .filter(|&(p, q)| {
                let (ia, ja) = piece_refs[p];
                let (ib, jb) = piece_refs[q];
                hulls_meet(&[
                    &star_faces[ia],
                    &rest_faces[ja],
                    &star_faces[ib],
                    &rest_faces[jb],
                ])
            })
            .collect()
    };

    let marked: Vec<bool> = piece_refs
        .par_iter()
        .map(|&(i, j)| {
            link_faces
                .iter()
                .any(|c| hulls_meet(&[&star_faces[i], &rest_faces[j], c]))
        })
        .collect();

    let mut parent: Vec<usize> = (0..piece_refs.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(p, q) in &adjacency {
        let (a, b) = (find(&mut parent, p), find(&mut parent, q));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut components: Vec<(usize, Vec<usize>, bool)> = Vec::new();
    for p in 0..piece_refs.len() {
        let root = find(&mut parent, p);
        match components.iter_mut().find(|(r, _, _)| *r == root) {
            Some((_, members, ok)) => {
                members.push(p);
                *ok |= marked[p];
            }
            None => components.push((root, vec![p], marked[p])),
        }
    }
    let components_total = components.len();
    let components_with_link_piece = components.iter().filter(|(_, _, ok)| *ok).count();
    let witness = components
        .iter()
        .find(|(_, _, ok)| !ok)
        .map(|(_, members, _)| members.clone());
    LocalPi0Report {
        vertex: v,
        pieces: piece_refs
            .iter()
            .map(|&(i, j)| PiecePair {
                star_face: star_faces[i].ids.clone(),
                outside_face: rest_faces[j].ids.clone(),
            })
            .collect(),
        components_total,
        components_with_link_piece,
        pass: components_with_link_piece == components_total,
        witness,
    }
}
