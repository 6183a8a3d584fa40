//! Sparse integer boundary matrices of a simplicial complex.

use crate::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Boundary operator from `degree`-faces to `(degree-1)`-faces.
///
/// Rows are indexed by the sorted list of `(degree-1)`-faces, columns by the
/// sorted list of `degree`-faces. Entries are the signs of the alternating
/// face deletions of each column's vertex list, which is stored in increasing
/// vertex order, so the matrix is determined by the complex alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub nrows: usize,
    pub ncols: usize,
    /// Per column: (row index, sign) pairs, sorted by row, sign in {-1, +1}.
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::from(0); self.ncols]; self.nrows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                out[i][j] = BigInt::from(s);
            }
        }
        out
    }

    /// Matrix product check used by the composition property tests.
    pub fn compose_is_zero(&self, next: &BoundaryMatrix) -> bool {
        assert_eq!(next.degree, self.degree + 1);
        assert_eq!(next.nrows, self.ncols);
        for col in &next.columns {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(mid, s_outer) in col {
                for &(row, s_inner) in &self.columns[mid] {
                    *acc.entry(row).or_insert(0) += i64::from(s_outer) * i64::from(s_inner);
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
        true
    }
}

/// Boundary matrices of degrees `1..=up_to`.
///
/// Degrees with no faces give matrices with zero columns; the list always has
/// length `up_to` so callers can index it by `degree - 1`.
pub fn boundary_matrices(complex: &SimplicialComplex, up_to: usize) -> Vec<BoundaryMatrix> {
    let mut out = Vec::with_capacity(up_to);
    let mut rows: Vec<Vec<usize>> = complex
        .faces_of_dim(0)
        .into_iter()
        .collect();
    for degree in 1..=up_to {
        let cols: Vec<Vec<usize>> = complex.faces_of_dim(degree).into_iter().collect();
        let row_index: BTreeMap<&[usize], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let columns = cols
            .iter()
            .map(|face| {
                let mut col = Vec::with_capacity(face.len());
                let mut sign: i8 = 1;
                let mut sub = Vec::with_capacity(face.len() - 1);
                for omit in 0..face.len() {
                    sub.clear();
                    sub.extend(face.iter().filter(|&&v| v != face[omit]));
                    col.push((row_index[sub.as_slice()], sign));
                    sign = -sign;
                }
                col.sort_unstable();
                col
            })
            .collect();
        out.push(BoundaryMatrix {
            degree,
            nrows: rows.len(),
            ncols: cols.len(),
            columns,
        });
        rows = cols;
    }
    out
}
