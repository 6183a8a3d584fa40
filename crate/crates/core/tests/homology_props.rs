//! Cross-checks of the Smith-form homology against independent field-rank
//! computations over Q and GF(2), on seeded random complexes.

use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rips_lab_core::geometry::rational::Rational;
use rips_lab_core::homology::{boundary_matrices, homology, BoundaryMatrix};
use rips_lab_core::simplicial::{six_vertex_projective_plane, SimplicialComplex};

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(4..11);
        let mut faces = Vec::new();
        for _ in 0..rng.gen_range(2..12) {
            let mut pool: Vec<usize> = (0..n).collect();
            for i in (1..pool.len()).rev() {
                pool.swap(i, rng.gen_range(0..=i));
            }
            pool.truncate(rng.gen_range(1..5));
            faces.push(pool);
        }
        let k = SimplicialComplex::from_faces(faces);
        if k.f_vector().iter().sum::<usize>() <= 500 {
            return k;
        }
    }
}

fn rank_mod2(m: &BoundaryMatrix) -> usize {
    // bitset Gaussian elimination, rows as u64 words
    let words = m.ncols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.nrows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, _) in col {
            rows[i][j / 64] ^= 1u64 << (j % 64);
        }
    }
    let mut rank = 0;
    for j in 0..m.ncols {
        let (w, b) = (j / 64, 1u64 << (j % 64));
        if let Some(p) = (rank..m.nrows).find(|&i| rows[i][w] & b != 0) {
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            for r in tail.iter_mut() {
                if r[w] & b != 0 {
                    for (x, y) in r.iter_mut().zip(&head[rank]) {
                        *x ^= *y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

fn rank_rational(m: &BoundaryMatrix) -> usize {
    let mut rows = vec![vec![Rational::zero(); m.ncols]; m.nrows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, s) in col {
            rows[i][j] = Rational::from_integer(s.into());
        }
    }
    let mut rank = 0;
    for j in 0..m.ncols {
        let Some(p) = (rank..m.nrows).find(|&i| !rows[i][j].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][j].clone();
        for i in rank + 1..m.nrows {
            if rows[i][j].is_zero() {
                continue;
            }
            let f = &rows[i][j] / &pivot;
            for c in j..m.ncols {
                let delta = &f * &rows[rank][c];
                rows[i][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

fn dense_product_is_zero(a: &BoundaryMatrix, b: &BoundaryMatrix) -> bool {
    let mut prod = vec![vec![0i64; b.ncols]; a.nrows];
    for (j, col) in b.columns.iter().enumerate() {
        for &(mid, s) in col {
            for &(row, s2) in &a.columns[mid] {
                prod[row][j] += i64::from(s) * i64::from(s2);
            }
        }
    }
    prod.iter().all(|r| r.iter().all(|&v| v == 0))
}

#[test]
fn smith_homology_matches_field_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240821);
    for case in 0..30 {
        let k = random_complex(&mut rng);
        let dim = k.dim().unwrap();
        let mats = boundary_matrices(&k, dim + 1);
        for w in mats.windows(2) {
            assert!(
                dense_product_is_zero(&w[0], &w[1]),
                "case {case}: boundary composition nonzero"
            );
        }
        let profile = homology(&k, dim);
        let f = k.f_vector();
        let rank_q = |deg: usize| -> usize {
            if deg == 0 || deg > mats.len() {
                0
            } else {
                rank_rational(&mats[deg - 1])
            }
        };
        let rank_2 = |deg: usize| -> usize {
            if deg == 0 || deg > mats.len() {
                0
            } else {
                rank_mod2(&mats[deg - 1])
            }
        };
        for deg in 0..=dim {
            let betti_q = f[deg] - rank_q(deg) - rank_q(deg + 1);
            assert_eq!(
                profile.betti[deg], betti_q,
                "case {case} degree {deg}: betti vs rational rank"
            );
            // universal coefficients: mod-2 betti picks up the even torsion
            // of this degree and the one below
            let even = |d: usize| -> usize {
                profile.torsion[d].iter().filter(|v| v.is_even()).count()
            };
            let betti_2 = f[deg] - rank_2(deg) - rank_2(deg + 1);
            let expected = profile.betti[deg] + even(deg) + if deg > 0 { even(deg - 1) } else { 0 };
            assert_eq!(
                betti_2, expected,
                "case {case} degree {deg}: mod-2 betti vs torsion count"
            );
        }
        assert_eq!(
            k.component_count(),
            profile.betti[0],
            "case {case}: component count"
        );
        let chi: i64 = f
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        let chi_betti: i64 = profile
            .betti
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        assert_eq!(chi, chi_betti, "case {case}: Euler characteristic");
    }
}

#[test]
fn projective_plane_mod2_betti() {
    // H(RP^2; Z/2) is one copy of Z/2 in each of degrees 0, 1, 2
    let k = six_vertex_projective_plane();
    let mats = boundary_matrices(&k, 3);
    let f = k.f_vector();
    let b0 = f[0] - rank_mod2(&mats[0]);
    let b1 = f[1] - rank_mod2(&mats[0]) - rank_mod2(&mats[1]);
    let b2 = f[2] - rank_mod2(&mats[1]);
    assert_eq!((b0, b1, b2), (1, 1, 1));
}
