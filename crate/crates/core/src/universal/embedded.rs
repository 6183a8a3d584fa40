//! Complexes with exact rational coordinates, and the check that the
//! coordinates really embed the complex linearly.

use crate::geometry::lp::{maximize, LinearSystem, LpOutcome};
use crate::geometry::rational::Rational;
use crate::geometry::Point;
use crate::simplicial::SimplicialComplex;
use num_traits::{One, Zero};

/// An abstract complex together with a point for each vertex. Vertices must
/// be exactly 0..n matching the coordinate list.
#[derive(Debug, Clone)]
pub struct EmbeddedComplex {
    complex: SimplicialComplex,
    coords: Vec<Point>,
}

impl EmbeddedComplex {
    pub fn new(complex: SimplicialComplex, coords: Vec<Point>) -> Self {
        let n = coords.len();
        assert!(n > 0, "an embedded complex needs at least one vertex");
        assert_eq!(
            complex.vertices(),
            (0..n).collect::<Vec<_>>(),
            "vertex ids must be exactly 0..{n}"
        );
        let dim = coords[0].dim();
        assert!(dim > 0, "ambient dimension must be positive");
        assert!(coords.iter().all(|p| p.dim() == dim), "mixed ambient dimensions");
        EmbeddedComplex { complex, coords }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords[0].dim()
    }

    /// The coordinate points of a face, in face order.
    pub fn realized(&self, face: &[usize]) -> Vec<Point> {
        face.iter().map(|&v| self.coords[v].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingViolation {
    /// A face whose vertex coordinates are affinely dependent.
    DegenerateFace { face: Vec<usize> },
    /// Two faces whose realizations share a point outside their common face.
    Overlap {
        face_a: Vec<usize>,
        face_b: Vec<usize>,
        witness: Point,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub valid: bool,
    pub violations: Vec<EmbeddingViolation>,
}

/// Do the coordinates realize the complex as a linear embedding? Checks
/// affine independence of every maximal face and, for every pair of maximal
/// faces, that the realized intersection stays inside the realized common
/// face. Subfaces inherit both properties: barycentric representations are
/// unique once the maximal faces are non-degenerate.
pub fn validate_embedding(ec: &EmbeddedComplex) -> EmbeddingReport {
    let mut violations = Vec::new();
    let maximal = ec.complex().maximal_faces();
    for face in maximal {
        if !affinely_independent(&ec.realized(face)) {
            violations.push(EmbeddingViolation::DegenerateFace { face: face.clone() });
        }
    }
    for (i, a) in maximal.iter().enumerate() {
        for b in maximal.iter().skip(i + 1) {
            if let Some(witness) = overlap_witness(ec, a, b) {
                violations.push(EmbeddingViolation::Overlap {
                    face_a: a.clone(),
                    face_b: b.clone(),
                    witness,
                });
            }
        }
    }
    EmbeddingReport { valid: violations.is_empty(), violations }
}

/// Rank check on the difference vectors from the first point.
fn affinely_independent(points: &[Point]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let dim = points[0].dim();
    if points.len() > dim + 1 {
        return false;
    }
    let mut rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.sub(&points[0]))
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let factor = &row[col] / &head[col];
                for c in col..dim {
                    let delta = &factor * &head[c];
                    row[c] = &row[c] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank == points.len() - 1
}

/// A point of `|a| ∩ |b|` carrying barycentric mass outside `a ∩ b`, if one
/// exists. One LP per pair: maximize the total mass on the non-shared
/// vertices over all common points; a positive optimum is a violation and
/// the optimizer is the witness.
fn overlap_witness(ec: &EmbeddedComplex, a: &[usize], b: &[usize]) -> Option<Point> {
    let shared: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
    if shared.len() == a.len() || shared.len() == b.len() {
        return None; // one face inside the other
    }
    let dim = ec.ambient_dim();
    let na = a.len();
    let nb = b.len();
    let ncols = na + nb;
    let mut sys = LinearSystem::new(ncols);
    for c in 0..dim {
        let mut row = Vec::with_capacity(ncols);
        for &v in a {
            row.push(ec.coords()[v].coord(c).clone());
        }
        for &v in b {
            row.push(-ec.coords()[v].coord(c));
        }
        sys.push_row(row, Rational::zero());
    }
    let mut sum_a = vec![Rational::zero(); ncols];
    for slot in sum_a.iter_mut().take(na) {
        *slot = Rational::one();
    }
    sys.push_row(sum_a, Rational::one());
    let mut sum_b = vec![Rational::zero(); ncols];
    for slot in sum_b.iter_mut().skip(na) {
        *slot = Rational::one();
    }
    sys.push_row(sum_b, Rational::one());
    let mut obj = vec![Rational::zero(); ncols];
    for (k, &v) in a.iter().enumerate() {
        if !shared.contains(&v) {
            obj[k] = Rational::one();
        }
    }
    for (k, &v) in b.iter().enumerate() {
        if !shared.contains(&v) {
            obj[na + k] = Rational::one();
        }
    }
    match maximize(&sys, &obj) {
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("masses are bounded by the sum rows"),
        LpOutcome::Optimal { value, point } => {
            if value.is_zero() {
                return None;
            }
            let gens: Vec<&Point> = a.iter().map(|&v| &ec.coords()[v]).collect();
            Some(Point::combine(&gens, &point[..na]))
        }
    }
}
