//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Diagonal form summary: `invariant_factors` are positive, each divides the
/// next, and their count equals `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

/// Reduces an integer matrix (given as rows) to Smith normal form.
///
/// Deterministic: the pivot is always the entry of smallest nonzero absolute
/// value in the active region, ties broken by lowest (row, col). Entries are
/// arbitrary-precision, so intermediate growth never overflows.
pub fn smith_normal_form(rows: &[Vec<BigInt>]) -> SmithForm {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(
        rows.iter().all(|r| r.len() == ncols),
        "ragged matrix"
    );
    let mut m = rows.to_vec();
    let mut factors = Vec::new();
    let mut t = 0usize;
    while t < nrows && t < ncols {
        let Some((pr, pc)) = min_abs_entry(&m, t) else {
            break;
        };
        m.swap(t, pr);
        swap_cols(&mut m, t, pc);
        loop {
            // Clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot, so this loop terminates.
            let mut swapped = false;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for j in t..ncols {
                        let d = &q * &m[t][j];
                        m[i][j] -= d;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(i, t);
                    swapped = true;
                }
            }
            if swapped {
                continue;
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for i in t..nrows {
                        let d = &q * &m[i][t];
                        m[i][j] -= d;
                    }
                }
                if !m[t][j].is_zero() {
                    swap_cols(&mut m, j, t);
                    swapped = true;
                }
            }
            if swapped {
                continue;
            }
            // Row and column are clear; force the divisibility chain.
            match first_non_multiple(&m, t) {
                Some(i) => {
                    for j in t + 1..ncols {
                        let add = m[i][j].clone();
                        m[t][j] += add;
                    }
                }
                None => break,
            }
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    SmithForm {
        rank: factors.len(),
        invariant_factors: factors,
    }
}

fn min_abs_entry(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m {
            row.swap(a, b);
        }
    }
}

fn first_non_multiple(m: &[Vec<BigInt>], t: usize) -> Option<usize> {
    let pivot = m[t][t].clone();
    for (i, row) in m.iter().enumerate().skip(t + 1) {
        if row.iter().skip(t + 1).any(|v| !v.mod_floor(&pivot).is_zero()) {
            return Some(i);
        }
    }
    None
}
