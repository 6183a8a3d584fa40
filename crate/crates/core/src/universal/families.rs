//! Minimal families of faces with empty common intersection.
//!
//! The critical scale of an embedding is controlled by how close disjoint
//! parts of the realization can get, measured over families of faces whose
//! abstract intersection is empty. Two truncations keep the enumeration
//! finite and small:
//!
//! * families larger than ambient dimension + 1 never matter: if every
//!   (dim+1)-subfamily of realized simplices met, Helly's theorem would give
//!   a common point, and in a valid embedding geometric and abstract
//!   intersections coincide — so an empty family contains an empty
//!   (dim+1)-subfamily, whose transversal diameter is no larger;
//! * non-minimal families never matter: dropping a face can only shrink the
//!   transversal diameter, so the minimum is attained on minimal families.

use crate::simplicial::SimplicialComplex;

/// Distinct nonempty faces whose common intersection is empty, minimal in
/// the sense that every single-face removal restores a common vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EmptyFamily {
    pub faces: Vec<Vec<usize>>,
}

impl EmptyFamily {
    pub fn size(&self) -> usize {
        self.faces.len()
    }
}

/// All inclusion-minimal empty families of at most `max_size` faces, in a
/// canonical order (by size, then lexicographically on the face lists).
/// Pass ambient dimension + 1 as `max_size` for the geometric application.
pub fn enumerate_minimal_empty_families(
    k: &SimplicialComplex,
    max_size: usize,
) -> Vec<EmptyFamily> {
    assert!(max_size >= 2, "families have at least two faces");
    let nv = k.vertices().len();
    assert!(nv <= 64, "vertex ids must fit a 64-bit mask");
    let mut faces = k.all_faces(None);
    faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let masks: Vec<u64> = faces.iter().map(|f| mask_of(f)).collect();
    let mut found = Vec::new();
    let mut stack = Vec::new();
    // universe mask: intersections start from "all vertices"
    let all = if nv == 64 { !0u64 } else { (1u64 << nv) - 1 };
    dfs(&masks, 0, all, &mut stack, max_size, &mut found);
    let mut out: Vec<EmptyFamily> = found
        .into_iter()
        .map(|ids| EmptyFamily {
            faces: ids.iter().map(|&i| faces[i].clone()).collect(),
        })
        .collect();
    out.sort_by(|a, b| (a.size(), &a.faces).cmp(&(b.size(), &b.faces)));
    out
}

fn mask_of(face: &[usize]) -> u64 {
    face.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// Depth-first family growth. A face that leaves the running intersection
/// unchanged is skipped: it could be removed from any family built below
/// it, so no minimal family arises on that branch.
fn dfs(
    masks: &[u64],
    from: usize,
    current: u64,
    stack: &mut Vec<usize>,
    max_size: usize,
    found: &mut Vec<Vec<usize>>,
) {
    for i in from..masks.len() {
        let next = current & masks[i];
        if next == current {
            continue;
        }
        stack.push(i);
        if next == 0 {
            if stack.len() >= 2 && is_minimal(masks, stack) {
                found.push(stack.clone());
            }
        } else if stack.len() < max_size {
            dfs(masks, i + 1, next, stack, max_size, found);
        }
        stack.pop();
    }
}

fn is_minimal(masks: &[u64], family: &[usize]) -> bool {
    if family.len() == 2 {
        return true; // singleton subfamilies are nonempty faces
    }
    (0..family.len()).all(|skip| {
        let mut inter = !0u64;
        for (j, &idx) in family.iter().enumerate() {
            if j != skip {
                inter &= masks[idx];
            }
        }
        inter != 0
    })
}
