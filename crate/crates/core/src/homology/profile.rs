//! Integral homology read off boundary-matrix Smith forms.

use super::{boundary_matrices, smith_normal_form};
use crate::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::One;

/// Betti numbers and torsion coefficients by degree.
///
/// `torsion[k]` lists the invariant factors above 1 of the degree-k torsion
/// subgroup, in divisibility order. Both lists have the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

/// Homology in degrees `0..=up_to`.
///
/// Degrees above the dimension of the complex report zeros, so the profile
/// always has length `up_to + 1`.
pub fn homology(complex: &SimplicialComplex, up_to: usize) -> HomologyProfile {
    let mats = boundary_matrices(complex, up_to + 1);
    let forms: Vec<_> = mats
        .iter()
        .map(|m| smith_normal_form(&m.to_dense()))
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 {
            0
        } else {
            forms[k - 1].rank
        }
    };
    let face_count = |k: usize| -> usize {
        if k == 0 {
            complex.faces_of_dim(0).len()
        } else {
            mats[k - 1].ncols
        }
    };
    let mut betti = Vec::with_capacity(up_to + 1);
    let mut torsion = Vec::with_capacity(up_to + 1);
    for k in 0..=up_to {
        betti.push(face_count(k) - rank(k) - rank(k + 1));
        torsion.push(
            forms[k]
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect(),
        );
    }
    HomologyProfile { betti, torsion }
}

/// Homology through the dimension of the complex (empty profile if empty).
pub fn homology_full(complex: &SimplicialComplex) -> HomologyProfile {
    match complex.dim() {
        Some(d) => homology(complex, d),
        None => HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
        },
    }
}
