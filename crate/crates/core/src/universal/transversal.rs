//! Minimum-diameter transversals of realized face families.
//!
//! Given faces sigma_1..sigma_t with empty common intersection, the problem
//! min max_{p<q} |x_p - x_q| over x_i in |sigma_i| is a convex minimax over
//! a product of simplices. A float subgradient descent produces a feasible
//! point which is then rationalized exactly, and two independent rational
//! mechanisms certify a lower bound:
//!
//! * mean-square: max^2 >= (sum of squared pairwise distances) / C(t,2),
//!   and the right side's minimum over the product polytope is an exact
//!   convex QP solved by enumerating support patterns: a pattern
//!   contributes iff its stationarity system admits a nonnegative
//!   solution, which an exact LP feasibility phase decides, and the
//!   optimum's own support always does — tight whenever the optimum has
//!   all pairwise distances equal (pairs, symmetric triples);
//! * grid sweep: evaluate on a barycentric grid and subtract the worst-case
//!   movement 2 * max_i r_i toward an off-grid point, where r_i bounds the
//!   rounding displacement inside member i.
//!
//! The certificate is the larger of the two; both survive degenerate
//! geometry (coincident or crossing affine hulls of distinct members
//! change which patterns are feasible, never the feasible values).

use super::embedded::EmbeddedComplex;
use super::families::EmptyFamily;
use crate::geometry::lp::{feasible_point, LinearSystem};
use crate::geometry::metric::squared_distance;
use crate::geometry::rational::{
    approx_rational, rat, sqrt_lower, sqrt_upper, to_f64, Rational,
};
use crate::geometry::Point;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct TransversalSolution {
    pub family: EmptyFamily,
    /// Barycentric coordinates per family member: nonnegative, sum exactly 1.
    pub barycentric: Vec<Vec<Rational>>,
    /// The realized transversal points.
    pub points: Vec<Point>,
    /// Exact squared diameter of the achieved transversal.
    pub value_sq: Rational,
    /// Rational lower bound on the true optimal diameter.
    pub certified_gap: Rational,
    /// True when the bracket stayed wider than 1/1000 after the full budget.
    pub budget_exhausted: bool,
}

impl TransversalSolution {
    pub fn value_upper(&self) -> Rational {
        sqrt_upper(&self.value_sq)
    }

    pub fn value_lower(&self) -> Rational {
        sqrt_lower(&self.value_sq)
    }
}

const SUBGRADIENT_ITERS: usize = 2000;
const RATIONALIZE_DEN: u64 = 1_000_000;
const QP_PATTERN_CAP: usize = 20_000;
const GRID_COMBO_CAP: usize = 300_000;
const BRACKET_TARGET: (i64, i64) = (1, 1000);

pub fn min_diameter_transversal(
    family: &EmptyFamily,
    ec: &EmbeddedComplex,
) -> TransversalSolution {
    let realized: Vec<Vec<Point>> = family.faces.iter().map(|f| ec.realized(f)).collect();
    assert!(realized.len() >= 2, "a family has at least two members");
    let mut barycentric = solve_float(&realized);
    let mut points = realize_config(&realized, &barycentric);
    let mut value_sq = max_pairwise_sq(&points);

    let target = rat(BRACKET_TARGET.0, BRACKET_TARGET.1);
    let mut certified = Rational::zero();
    if let Some(qp) = mean_square_lower(&realized) {
        certified = certified.max(qp.bound);
        // a sign-feasible stationary configuration is itself a transversal;
        // on symmetric instances it beats the float solver outright
        if let Some(cand) = qp.feasible_candidate {
            let cand_points = realize_config(&realized, &cand);
            let cand_sq = max_pairwise_sq(&cand_points);
            if cand_sq < value_sq {
                barycentric = cand;
                points = cand_points;
                value_sq = cand_sq;
            }
        }
    }
    let value_upper = sqrt_upper(&value_sq);
    for m in [8usize, 16, 32, 64] {
        if &value_upper - &certified <= target {
            break;
        }
        if let Some(g) = grid_lower(&realized, m) {
            certified = certified.max(g);
        } else {
            break; // combo budget hit; finer grids are no cheaper
        }
    }
    let budget_exhausted = &value_upper - &certified > target;
    TransversalSolution {
        family: family.clone(),
        barycentric,
        points,
        value_sq,
        certified_gap: certified,
        budget_exhausted,
    }
}

fn realize_config(realized: &[Vec<Point>], barycentric: &[Vec<Rational>]) -> Vec<Point> {
    realized
        .iter()
        .zip(barycentric)
        .map(|(verts, b)| {
            let refs: Vec<&Point> = verts.iter().collect();
            Point::combine(&refs, b)
        })
        .collect()
}

fn max_pairwise_sq(points: &[Point]) -> Rational {
    let mut best = Rational::zero();
    for (i, p) in points.iter().enumerate() {
        for q in points.iter().skip(i + 1) {
            best = best.max(squared_distance(p, q));
        }
    }
    best
}

// ---- float subgradient descent ----------------------------------------

fn solve_float(realized: &[Vec<Point>]) -> Vec<Vec<Rational>> {
    let verts: Vec<Vec<Vec<f64>>> = realized
        .iter()
        .map(|m| {
            m.iter()
                .map(|p| p.coords().iter().map(to_f64).collect())
                .collect()
        })
        .collect();
    let scale = float_diameter(&verts).max(1e-9);
    let max_k = verts.iter().map(|m| m.len()).max().unwrap();

    let mut best_cfg: Option<(f64, Vec<Vec<f64>>)> = None;
    for start in 0..=max_k {
        let mut cfg: Vec<Vec<f64>> = verts
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let k = m.len();
                if start == 0 {
                    vec![1.0 / k as f64; k]
                } else {
                    let mut b = vec![0.0; k];
                    b[(start - 1 + i) % k] = 1.0;
                    b
                }
            })
            .collect();
        for it in 0..SUBGRADIENT_ITERS {
            let pts: Vec<Vec<f64>> = cfg
                .iter()
                .zip(&verts)
                .map(|(b, m)| combine_f64(b, m))
                .collect();
            let (p, q, d) = active_pair(&pts);
            if best_cfg.as_ref().is_none_or(|(v, _)| d < *v) {
                best_cfg = Some((d, cfg.clone()));
            }
            if d < 1e-12 {
                break;
            }
            let step = 0.5 * scale / ((it + 1) as f64).sqrt();
            let dir: Vec<f64> = pts[p]
                .iter()
                .zip(&pts[q])
                .map(|(a, b)| (a - b) / d)
                .collect();
            descend(&mut cfg[p], &verts[p], &dir, -step);
            descend(&mut cfg[q], &verts[q], &dir, step);
        }
    }
    let cfg = best_cfg.unwrap().1;
    cfg.iter().map(|b| rationalize_barycentric(b)).collect()
}

fn float_diameter(verts: &[Vec<Vec<f64>>]) -> f64 {
    let all: Vec<&Vec<f64>> = verts.iter().flatten().collect();
    let mut best = 0.0f64;
    for (i, p) in all.iter().enumerate() {
        for q in all.iter().skip(i + 1) {
            let d: f64 = p.iter().zip(q.iter()).map(|(a, b)| (a - b) * (a - b)).sum();
            best = best.max(d);
        }
    }
    best.sqrt()
}

fn combine_f64(b: &[f64], verts: &[Vec<f64>]) -> Vec<f64> {
    let dim = verts[0].len();
    let mut out = vec![0.0; dim];
    for (w, v) in b.iter().zip(verts) {
        for (o, c) in out.iter_mut().zip(v) {
            *o += w * c;
        }
    }
    out
}

fn active_pair(pts: &[Vec<f64>]) -> (usize, usize, f64) {
    let mut best = (0, 1, -1.0);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d: f64 = pts[i]
                .iter()
                .zip(&pts[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    (best.0, best.1, best.2.max(0.0).sqrt())
}

/// One projected step: move the member's point along `dir` scaled by `step`
/// and re-project the barycentric weights onto the simplex.
fn descend(b: &mut [f64], verts: &[Vec<f64>], dir: &[f64], step: f64) {
    let moved: Vec<f64> = b
        .iter()
        .zip(verts)
        .map(|(w, v)| {
            let g: f64 = v.iter().zip(dir).map(|(a, c)| a * c).sum();
            w + step * g
        })
        .collect();
    let projected = project_simplex(&moved);
    b.copy_from_slice(&projected);
}

/// Euclidean projection onto the standard simplex by the sorting algorithm.
fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut css = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        css += uj;
        let t = (css - 1.0) / (j as f64 + 1.0);
        if uj - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// Nearby rational barycentric vector: approximate, clamp, renormalize.
/// The result is exactly feasible whatever the float input looked like.
fn rationalize_barycentric(b: &[f64]) -> Vec<Rational> {
    let mut out: Vec<Rational> = b
        .iter()
        .map(|&x| {
            if x <= 0.0 {
                Rational::zero()
            } else {
                approx_rational(x, RATIONALIZE_DEN)
            }
        })
        .map(|r| if r.is_negative() { Rational::zero() } else { r })
        .collect();
    let sum: Rational = out.iter().sum();
    if sum.is_zero() {
        let k = b.len();
        return vec![rat(1, k as i64); k];
    }
    for r in out.iter_mut() {
        *r = &*r / &sum;
    }
    out
}

// ---- exact mean-square lower bound ------------------------------------

struct MeanSquareCertificate {
    /// sqrt-floor of the exact quadratic minimum over the pair count.
    bound: Rational,
    /// Best stationary feasible configuration, padded back to full
    /// per-member weight vectors, ranked by its exact max-pairwise value.
    feasible_candidate: Option<Vec<Vec<Rational>>>,
}

/// Exact minimum of the sum of squared pairwise distances over the product
/// of member simplices, turned into a diameter bound via the mean: the max
/// of C(t,2) squared distances is at least their average. For each support
/// pattern the stationarity conditions on the pattern's affine hulls form
/// a linear system; asking for a nonnegative solution is exact LP
/// feasibility. The optimum's own support always yields a feasible
/// pattern, and every feasible witness lies in the product polytope, so
/// the minimum over feasible patterns is the true quadratic minimum —
/// degenerate geometry (coincident or crossing affine hulls) only makes
/// some patterns infeasible, never undercuts the bound.
fn mean_square_lower(realized: &[Vec<Point>]) -> Option<MeanSquareCertificate> {
    let t = realized.len();
    let sizes: Vec<usize> = realized.iter().map(|m| m.len()).collect();
    let mut patterns: usize = 1;
    for &k in &sizes {
        patterns = patterns.checked_mul((1usize << k) - 1)?;
        if patterns > QP_PATTERN_CAP {
            return None;
        }
    }
    let pairs = (t * (t - 1) / 2) as i64;
    let mut q_star: Option<Rational> = None;
    let mut candidate: Option<(Rational, Vec<Vec<Rational>>)> = None;
    let mut support = vec![0usize; t];
    enumerate_supports(&sizes, 0, &mut support, &mut |sup| {
        if let Some((q, weights)) = pattern_feasible_minimum(realized, sup) {
            q_star = Some(match q_star.take() {
                Some(b) => b.min(q),
                None => q,
            });
            let value = max_pairwise_sq(&realize_config(realized, &weights));
            if candidate.as_ref().is_none_or(|(v, _)| value < *v) {
                candidate = Some((value, weights));
            }
        }
    });
    let q_star = q_star.expect("the quadratic optimum's support pattern is feasible");
    Some(MeanSquareCertificate {
        bound: sqrt_lower(&(q_star / rat(pairs, 1))),
        feasible_candidate: candidate.map(|(_, w)| w),
    })
}

fn enumerate_supports(
    sizes: &[usize],
    i: usize,
    support: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if i == sizes.len() {
        visit(support);
        return;
    }
    for mask in 1..(1usize << sizes[i]) {
        support[i] = mask;
        enumerate_supports(sizes, i + 1, support, visit);
    }
}

/// Minimum of the squared-distance sum on one support pattern, with the
/// witness weights. The witness solves the pattern's stationarity system
/// with nonnegative weights summing to one per member; all stationary
/// points of a convex quadratic on an affine subspace share their value,
/// so any witness gives the pattern's exact minimum. `None` when no
/// nonnegative stationary point exists.
fn pattern_feasible_minimum(
    realized: &[Vec<Point>],
    support: &[usize],
) -> Option<(Rational, Vec<Vec<Rational>>)> {
    let t = realized.len();
    let free: Vec<Vec<usize>> = support
        .iter()
        .zip(realized)
        .map(|(&mask, m)| (0..m.len()).filter(|j| mask >> j & 1 == 1).collect())
        .collect();
    let offsets: Vec<usize> = free
        .iter()
        .scan(0usize, |acc, f| {
            let o = *acc;
            *acc += f.len();
            Some(o)
        })
        .collect();
    let nvars: usize = free.iter().map(|f| f.len()).sum();
    // columns: pattern weights, then split sign-free multipliers per member
    let ncols = nvars + 2 * t;
    let mut sys = LinearSystem::new(ncols);
    // stationarity rows, one per pattern weight
    for (i, fi) in free.iter().enumerate() {
        for &j in fi {
            let mut row = vec![Rational::zero(); ncols];
            let vij = &realized[i][j];
            for (q, fq) in free.iter().enumerate() {
                if q == i {
                    for (ll, &l) in fi.iter().enumerate() {
                        row[offsets[i] + ll] +=
                            rat(2 * (t as i64 - 1), 1) * dot(&realized[i][l], vij);
                    }
                } else {
                    for (mm, &m) in fq.iter().enumerate() {
                        row[offsets[q] + mm] -= rat(2, 1) * dot(&realized[q][m], vij);
                    }
                }
            }
            row[nvars + 2 * i] = Rational::one();
            row[nvars + 2 * i + 1] = -Rational::one();
            sys.push_row(row, Rational::zero());
        }
    }
    // weight-sum rows, one per member
    for (i, fi) in free.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols];
        for ll in 0..fi.len() {
            row[offsets[i] + ll] = Rational::one();
        }
        sys.push_row(row, Rational::one());
    }
    let sol = feasible_point(&sys)?;
    let mut full_weights: Vec<Vec<Rational>> = Vec::with_capacity(t);
    let points: Vec<Point> = free
        .iter()
        .enumerate()
        .map(|(i, fi)| {
            let gens: Vec<&Point> = fi.iter().map(|&j| &realized[i][j]).collect();
            let weights: Vec<Rational> =
                (0..fi.len()).map(|jj| sol[offsets[i] + jj].clone()).collect();
            let mut full = vec![Rational::zero(); realized[i].len()];
            for (&j, w) in fi.iter().zip(&weights) {
                full[j] = w.clone();
            }
            full_weights.push(full);
            Point::combine(&gens, &weights)
        })
        .collect();
    let mut q = Rational::zero();
    for (i, p) in points.iter().enumerate() {
        for r in points.iter().skip(i + 1) {
            q += squared_distance(p, r);
        }
    }
    Some((q, full_weights))
}

fn dot(p: &Point, q: &Point) -> Rational {
    p.coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| a * b)
        .sum()
}

// ---- grid sweep lower bound -------------------------------------------

/// Lower bound from an exhaustive barycentric grid at resolution `m`:
/// every feasible point is within r_i = 2 (k_i - 1) diam_i / m of a grid
/// point inside member i, and the diameter function moves by at most the
/// two active members' displacements. `None` when the combination count
/// would exceed the budget.
fn grid_lower(realized: &[Vec<Point>], m: usize) -> Option<Rational> {
    let mut grids: Vec<Vec<Point>> = Vec::with_capacity(realized.len());
    let mut combos: usize = 1;
    for member in realized {
        let g = member_grid(member, m);
        combos = combos.checked_mul(g.len())?;
        if combos > GRID_COMBO_CAP {
            return None;
        }
        grids.push(g);
    }
    let mut slack = Rational::zero();
    for member in realized {
        if member.len() > 1 {
            let refs: Vec<&Point> = member.iter().collect();
            let diam_sq = max_pairwise_sq(&refs.iter().map(|p| (*p).clone()).collect::<Vec<_>>());
            let r = sqrt_upper(&diam_sq) * rat(2 * (member.len() as i64 - 1), m as i64);
            slack = slack.max(r);
        }
    }
    // pairwise distance tables, then a product sweep over indices
    let t = grids.len();
    let mut tables: Vec<Vec<Vec<Rational>>> = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            let mut tbl = Vec::with_capacity(grids[i].len());
            for p in &grids[i] {
                tbl.push(grids[j].iter().map(|q| squared_distance(p, q)).collect());
            }
            tables.push(tbl);
        }
    }
    let mut idx = vec![0usize; t];
    let mut min_max_sq: Option<Rational> = None;
    loop {
        let mut worst = Rational::zero();
        let mut ti = 0;
        for i in 0..t {
            for j in (i + 1)..t {
                worst = worst.max(tables[ti][idx[i]][idx[j]].clone());
                ti += 1;
            }
        }
        min_max_sq = Some(match min_max_sq.take() {
            Some(b) => b.min(worst),
            None => worst,
        });
        // odometer increment
        let mut pos = t;
        while pos > 0 {
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < grids[pos].len() {
                break;
            }
            idx[pos] = 0;
            if pos == 0 {
                let base = sqrt_lower(&min_max_sq.unwrap());
                let two = rat(2, 1);
                let bound = base - two * slack;
                return Some(if bound.is_negative() { Rational::zero() } else { bound });
            }
        }
    }
}

/// All barycentric grid points of one member at resolution `m`, as ambient
/// points. Singletons collapse to the vertex itself.
fn member_grid(member: &[Point], m: usize) -> Vec<Point> {
    let k = member.len();
    if k == 1 {
        return vec![member[0].clone()];
    }
    let refs: Vec<&Point> = member.iter().collect();
    let mut out = Vec::new();
    let mut comp = vec![0usize; k];
    compositions(m, k, 0, &mut comp, &mut |c| {
        let weights: Vec<Rational> = c.iter().map(|&x| rat(x as i64, m as i64)).collect();
        out.push(Point::combine(&refs, &weights));
    });
    out
}

pub(crate) fn compositions(
    total: usize,
    parts: usize,
    i: usize,
    comp: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if i == parts - 1 {
        comp[i] = total;
        visit(comp);
        return;
    }
    for x in 0..=total {
        comp[i] = x;
        compositions(total - x, parts, i + 1, comp, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    fn embed(faces: Vec<Vec<usize>>, coords: Vec<Point>) -> EmbeddedComplex {
        EmbeddedComplex::new(SimplicialComplex::from_faces(faces), coords)
    }

    fn family(faces: &[&[usize]]) -> EmptyFamily {
        EmptyFamily { faces: faces.iter().map(|f| f.to_vec()).collect() }
    }

    /// Exact squared distance from a point to a segment, as an oracle.
    fn point_segment_sq(p: &Point, a: &Point, b: &Point) -> Rational {
        let ab = b.sub(a);
        let ap = p.sub(a);
        let len: Rational = ab.iter().map(|x| x * x).sum();
        if len.is_zero() {
            return squared_distance(p, a);
        }
        let mut tau: Rational = ab.iter().zip(&ap).map(|(x, y)| x * y).sum::<Rational>() / len;
        if tau.is_negative() {
            tau = Rational::zero();
        }
        if tau > Rational::one() {
            tau = Rational::one();
        }
        let foot = Point::combine(&[a, b], &[Rational::one() - &tau, tau]);
        squared_distance(p, &foot)
    }

    #[test]
    fn two_disjoint_vertices_have_no_freedom() {
        let ec = embed(
            vec![vec![0], vec![1]],
            vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 4])],
        );
        let sol = min_diameter_transversal(&family(&[&[0], &[1]]), &ec);
        assert_eq!(sol.value_sq, rat(25, 1));
        assert_eq!(sol.certified_gap, rat(5, 1));
        assert!(!sol.budget_exhausted);
    }

    #[test]
    fn vertex_against_hypotenuse_matches_the_closed_form() {
        let coords = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[0, 1]),
        ];
        let ec = embed(vec![vec![0, 1], vec![1, 2], vec![0, 2]], coords.clone());
        let truth = point_segment_sq(&coords[0], &coords[1], &coords[2]);
        assert_eq!(truth, rat(1, 2));
        let sol = min_diameter_transversal(&family(&[&[0], &[1, 2]]), &ec);
        // achieved value is feasible, so it sits at or above the truth
        assert!(sol.value_sq >= truth);
        assert!(&sol.value_sq - &truth < rat(1, 1_000_000));
        // certificate below the truth, and the bracket is tight
        let truth_dist_floor = sqrt_lower(&truth);
        assert!(sol.certified_gap <= sqrt_upper(&truth));
        assert!(&truth_dist_floor - &sol.certified_gap < rat(1, 1000));
        assert!(!sol.budget_exhausted);
    }

    #[test]
    fn opposite_square_edges_certify_exactly_one() {
        let ec = embed(
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[0, 1]),
            ],
        );
        let sol = min_diameter_transversal(&family(&[&[0, 1], &[2, 3]]), &ec);
        assert_eq!(sol.certified_gap, Rational::one());
        assert!(sol.value_sq >= Rational::one());
        assert!(&sol.value_sq - Rational::one() < rat(1, 100_000));
    }

    #[test]
    fn near_equilateral_edge_triple_brackets_one_half() {
        // unit-base triangle with apex height 433/500: distance pattern of
        // the equilateral one to within 2e-5 per side
        let coords = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::new(vec![rat(1, 2), rat(433, 500)]),
        ];
        let ec = embed(vec![vec![0, 1], vec![1, 2], vec![0, 2]], coords);
        let sol =
            min_diameter_transversal(&family(&[&[0, 1], &[0, 2], &[1, 2]]), &ec);
        let half = rat(1, 2);
        let tol = rat(1, 1000);
        assert!(sol.certified_gap > &half - &tol, "gap {}", sol.certified_gap);
        assert!(sol.value_upper() < &half + &tol, "upper {}", sol.value_upper());
        assert!(sol.certified_gap <= sol.value_upper());
        assert!(!sol.budget_exhausted);
    }

    #[test]
    fn feasibility_is_exact_after_rationalization() {
        let coords = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[7, 1]),
            Point::from_ints(&[3, 9]),
        ];
        let ec = embed(vec![vec![0, 1], vec![1, 2], vec![0, 2]], coords);
        let sol = min_diameter_transversal(&family(&[&[0, 1], &[1, 2]]), &ec);
        for b in &sol.barycentric {
            assert!(b.iter().all(|w| !w.is_negative()));
            assert_eq!(b.iter().sum::<Rational>(), Rational::one());
        }
        // shared vertex 1: the transversal can collapse to it
        assert_eq!(sol.value_sq, Rational::zero());
    }

    #[test]
    fn grid_bound_never_exceeds_the_achieved_value() {
        let coords = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[1, 3]),
            Point::from_ints(&[5, 1]),
        ];
        let ec = embed(vec![vec![0, 1, 2], vec![3]], coords);
        let sol = min_diameter_transversal(&family(&[&[0, 1, 2], &[3]]), &ec);
        assert!(sol.certified_gap <= sol.value_upper());
        assert!(sol.certified_gap.is_positive());
    }
}
