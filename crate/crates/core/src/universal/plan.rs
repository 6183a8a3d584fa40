//! Sampling plans: finite rational point sets on a realized complex, dense
//! enough for the scale-`epsilon` proximity complex to be certified.
//!
//! The density target comes from the radial shrink available around each
//! face: a ball of radius R around a face's center, intersected with a
//! sphere of radius epsilon, leaves a collar of depth
//! `epsilon - epsilon*sqrt(1 - epsilon^2/4R^2)` that the certification
//! machinery can absorb. The global target `delta` is the minimum collar
//! over all faces (with the Taylor floor `epsilon*u/2`, `u = eps^2/4R^2`,
//! guarding the rounding of the square root, and `epsilon/2` when the face
//! ball already fits inside the scale).
//!
//! Each maximal face gets a barycentric grid at resolution
//! `m = ceil(8(k-1) * diam / delta)` pushed into the relative interior by
//! the affine shrink `b -> (1-k*gamma)*b + gamma`, `gamma = 1/(4m)`. The
//! rounding error of the grid is at most `2(k-1)*diam/m <= delta/4` and the
//! shrink moves points by at most `k*diam/(2m) <= delta/8`, so every point
//! of the realized complex lies within `3*delta/8 < delta/2` of a sample.
//! Samples land strictly inside their face, so relative interiors being
//! disjoint gives every sample a unique carrier face.

use super::embedded::EmbeddedComplex;
use super::transversal::compositions;
use crate::error::GeometryError;
use crate::geometry::rational::{rat, sqrt_upper, Rational};
use crate::geometry::metric::squared_distance;
use crate::geometry::Point;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub struct FaceGrid {
    /// Maximal face the grid lives on.
    pub face: Vec<usize>,
    pub resolution: usize,
    /// Index of the grid's first sample in the plan's point list.
    pub first: usize,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct SamplingPlan {
    pub epsilon: Rational,
    /// Density target the grids were sized for.
    pub delta: Rational,
    pub points: Vec<Point>,
    /// Carrier face per sample: the unique face whose relative interior
    /// holds it. Always one of the complex's maximal faces.
    pub carriers: Vec<Vec<usize>>,
    pub grids: Vec<FaceGrid>,
}

pub const DEFAULT_SAMPLE_CAP: usize = 200_000;

pub fn sampling_plan(
    ec: &EmbeddedComplex,
    epsilon: &Rational,
    cap: usize,
) -> Result<SamplingPlan, GeometryError> {
    if !epsilon.is_positive() {
        return Err(GeometryError::EpsilonOutOfRange {
            detail: format!("scale {epsilon} is not positive"),
        });
    }
    let delta = density_target(ec, epsilon);
    let maximal: Vec<Vec<usize>> = ec.complex().maximal_faces().to_vec();

    // resolutions and projected size first; generation only under the cap
    let mut resolutions = Vec::with_capacity(maximal.len());
    let mut projected = BigInt::zero();
    for face in &maximal {
        let k = face.len();
        let m = grid_resolution(ec, face, &delta);
        projected += grid_size(&m, k);
        resolutions.push(m);
    }
    match projected.to_usize() {
        Some(p) if p <= cap => {}
        _ => {
            return Err(GeometryError::PlanTooLarge {
                projected: projected.to_usize().unwrap_or(usize::MAX),
                cap,
            });
        }
    }

    let mut points = Vec::new();
    let mut carriers = Vec::new();
    let mut grids = Vec::with_capacity(maximal.len());
    for (face, m_big) in maximal.iter().zip(&resolutions) {
        let k = face.len();
        let m = m_big.to_usize().expect("under the cap, so it fits");
        let verts = ec.realized(face);
        let refs: Vec<&Point> = verts.iter().collect();
        let first = points.len();
        let gamma = rat(1, 4 * m as i64);
        let squeeze = Rational::one() - rat(k as i64, 1) * &gamma;
        let mut comp = vec![0usize; k];
        compositions(m, k, 0, &mut comp, &mut |c| {
            let weights: Vec<Rational> = c
                .iter()
                .map(|&x| &squeeze * rat(x as i64, m as i64) + &gamma)
                .collect();
            points.push(Point::combine(&refs, &weights));
            carriers.push(face.clone());
        });
        grids.push(FaceGrid {
            face: face.clone(),
            resolution: m,
            first,
            count: points.len() - first,
        });
    }
    Ok(SamplingPlan {
        epsilon: epsilon.clone(),
        delta,
        points,
        carriers,
        grids,
    })
}

/// Minimum collar depth over all faces.
fn density_target(ec: &EmbeddedComplex, epsilon: &Rational) -> Rational {
    let mut delta: Option<Rational> = None;
    for face in ec.complex().all_faces(None) {
        let d = face_collar(ec, &face, epsilon);
        delta = Some(match delta.take() {
            Some(cur) => cur.min(d),
            None => d,
        });
    }
    delta.expect("complexes are nonempty")
}

fn face_collar(ec: &EmbeddedComplex, face: &[usize], epsilon: &Rational) -> Rational {
    let verts = ec.realized(face);
    let refs: Vec<&Point> = verts.iter().collect();
    let center = Point::barycenter(&refs);
    // reach of the face's closed star from the center
    let mut star_verts: Vec<usize> = face.to_vec();
    star_verts.extend(ec.complex().link_of_face(face).vertices());
    let mut r_sq = Rational::zero();
    for &w in &star_verts {
        r_sq = r_sq.max(squared_distance(&center, &ec.coords()[w]));
    }
    let r_up = sqrt_upper(&r_sq);
    let two_r = rat(2, 1) * &r_up;
    if two_r <= *epsilon {
        return epsilon / rat(2, 1);
    }
    let u = epsilon * epsilon / (rat(4, 1) * &r_up * &r_up);
    let direct = epsilon * (Rational::one() - sqrt_upper(&(Rational::one() - &u)));
    let taylor = epsilon * &u / rat(2, 1);
    direct.max(taylor)
}

fn grid_resolution(ec: &EmbeddedComplex, face: &[usize], delta: &Rational) -> BigInt {
    let k = face.len();
    if k == 1 {
        return BigInt::one();
    }
    let verts = ec.realized(face);
    let mut diam_sq = Rational::zero();
    for (i, p) in verts.iter().enumerate() {
        for q in verts.iter().skip(i + 1) {
            diam_sq = diam_sq.max(squared_distance(p, q));
        }
    }
    let m = rat(8 * (k as i64 - 1), 1) * sqrt_upper(&diam_sq) / delta;
    m.ceil().to_integer().max(BigInt::one())
}

/// Number of barycentric grid points: C(m + k - 1, k - 1).
fn grid_size(m: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..k {
        num *= m + BigInt::from(i);
        den *= BigInt::from(i);
    }
    num / den
}
