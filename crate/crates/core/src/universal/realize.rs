//! End-to-end realization check: sample a realized complex, build the
//! proximity complex at a certified-safe scale, and establish that it has
//! the homotopy type of the complex.
//!
//! Two verification routes. Small instances expand the proximity complex
//! outright and compare homology through the complex dimension. Dense
//! instances (the normal case: certified scales force thousands of
//! samples) never expand the complex; instead the vertex-star sample sets
//! are shown to cover every maximal clique while each face's star set
//! crushes to a point, so the proximity complex is homotopy equivalent to
//! the nerve of the star cover, and that nerve is the complex itself:
//! star sets intersect in face star sets, empty exactly for non-faces.

use super::cover::verify_cover;
use super::crush::{crush_on, CrushOutcome};
use super::embedded::EmbeddedComplex;
use super::epsilon::epsilon_bracket;
use super::plan::{sampling_plan, SamplingPlan};
use crate::error::GeometryError;
use crate::geometry::rational::{rat, Rational};
use crate::geometry::metric::squared_distance;
use crate::geometry::{Metric, Point};
use crate::homology::{homology, HomologyProfile};
use crate::simplicial::rips::{adjacency_of, maximal_cliques};
use crate::simplicial::complex::for_each_subset;
use crate::simplicial::{PointCloud, SimplicialComplex};
use num_traits::Signed;

/// How the proximity complex was compared against the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeStrategy {
    /// Homology computed on the expanded proximity complex.
    Direct { faces: usize },
    /// Cover-and-crush certificate; no expansion.
    CertifiedNerve { cover_cliques: usize, crushes: usize },
}

#[derive(Debug, Clone)]
pub struct RealizeReport {
    pub epsilon: Rational,
    /// Certified bracket on the critical scale, when families exist.
    pub scale_lower: Option<Rational>,
    pub scale_upper: Option<Rational>,
    pub sample_size: usize,
    pub density_target: Rational,
    pub strategy: RealizeStrategy,
    pub complex_profile: HomologyProfile,
    pub sample_profile: HomologyProfile,
    pub matched: bool,
}

/// Sample the realized complex and verify its proximity complex at scale
/// `epsilon` (default: half the certified lower bracket end). The scale
/// must sit strictly below the critical threshold; values at or above the
/// bracket's upper end are rejected outright.
pub fn realize(
    ec: &EmbeddedComplex,
    epsilon: Option<&Rational>,
    cap: usize,
) -> Result<RealizeReport, GeometryError> {
    let bracket = epsilon_bracket(ec)?;
    let eps = match epsilon {
        Some(e) => {
            if !e.is_positive() {
                return Err(GeometryError::EpsilonOutOfRange {
                    detail: format!("scale {e} is not positive"),
                });
            }
            if let Some(upper) = &bracket.upper {
                if e >= upper {
                    return Err(GeometryError::EpsilonOutOfRange {
                        detail: format!(
                            "scale {e} is at or above the critical bracket's upper end {upper}"
                        ),
                    });
                }
            }
            e.clone()
        }
        None => match &bracket.lower {
            Some(lower) if lower.is_positive() => lower / rat(2, 1),
            Some(_) => {
                return Err(GeometryError::CertificationFailed {
                    what: "no positive lower bound on the critical scale; \
                           pass an explicit scale"
                        .into(),
                });
            }
            None => {
                return Err(GeometryError::CertificationFailed {
                    what: "no separating families, so no default scale exists; \
                           pass an explicit scale"
                        .into(),
                });
            }
        },
    };

    let plan = sampling_plan(ec, &eps, cap)?;
    let cloud = PointCloud::new(plan.points.clone(), eps.clone(), true, Metric::Euclidean);
    let ids: Vec<usize> = (0..cloud.len()).collect();
    let graph = adjacency_of(&cloud, &ids);
    let cliques = maximal_cliques(&graph);

    let dim_k = ec.complex().dim().expect("complexes are nonempty");
    let complex_profile = homology(ec.complex(), dim_k);

    let strategy;
    let sample_profile;
    if expansion_estimate(&cliques, dim_k + 2) <= DIRECT_FACE_BUDGET {
        let expanded = expand_cliques(&cliques, dim_k + 1);
        strategy = RealizeStrategy::Direct { faces: expanded.all_faces(None).len() };
        sample_profile = homology(&expanded, dim_k);
    } else {
        let crushes = certify_nerve(ec, &plan, &graph, &cliques)?;
        strategy = RealizeStrategy::CertifiedNerve { cover_cliques: cliques.len(), crushes };
        // certificate: the proximity complex is homotopy equivalent to the
        // realized complex, so the profiles coincide
        sample_profile = complex_profile.clone();
    }
    let matched = sample_profile == complex_profile;
    Ok(RealizeReport {
        epsilon: eps,
        scale_lower: bracket.lower,
        scale_upper: bracket.upper,
        sample_size: plan.points.len(),
        density_target: plan.delta,
        strategy,
        complex_profile,
        sample_profile,
        matched,
    })
}

const DIRECT_FACE_BUDGET: usize = 3000;

/// Number of faces a clique expansion up to `max_card`-vertex faces would
/// produce, counted with multiplicity across cliques (an overestimate).
fn expansion_estimate(cliques: &[Vec<usize>], max_card: usize) -> usize {
    let mut total: usize = 0;
    for c in cliques {
        let n = c.len();
        let mut level: usize = 1;
        for j in 1..=n.min(max_card) {
            level = match level.checked_mul(n - j + 1) {
                Some(v) => v / j,
                None => return usize::MAX,
            };
            total = match total.checked_add(level) {
                Some(v) => v,
                None => return usize::MAX,
            };
        }
    }
    total
}

/// Clique complex truncated above dimension `max_dim`.
fn expand_cliques(cliques: &[Vec<usize>], max_dim: usize) -> SimplicialComplex {
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for c in cliques {
        if c.len() > max_dim + 1 {
            for_each_subset(c, max_dim + 1, &mut |s| faces.push(s.to_vec()));
        } else {
            faces.push(c.clone());
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// The cover-and-crush certificate. Returns the number of face star sets
/// crushed.
fn certify_nerve(
    ec: &EmbeddedComplex,
    plan: &SamplingPlan,
    graph: &crate::simplicial::rips::BitGraph,
    cliques: &[Vec<usize>],
) -> Result<usize, GeometryError> {
    let nv = ec.coords().len();
    assert!(nv <= 64, "carrier masks use one machine word");
    let masks: Vec<u64> = plan
        .carriers
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();

    // every simplex of the proximity complex inside one vertex star set
    if let Some(witness) = verify_cover(cliques, &masks) {
        let head: Vec<usize> = witness.clique.iter().take(4).copied().collect();
        return Err(GeometryError::CertificationFailed {
            what: format!(
                "a {}-sample clique spans carriers with no shared vertex \
                 (first samples {head:?})",
                witness.clique.len()
            ),
        });
    }

    // every face's star set crushes to a point
    let faces = ec.complex().all_faces(None);
    for face in &faces {
        let fmask: u64 = face.iter().fold(0u64, |m, &v| m | 1 << v);
        let members: Vec<usize> = (0..masks.len())
            .filter(|&i| masks[i] & fmask == fmask)
            .collect();
        assert!(!members.is_empty(), "every face owns samples by construction");
        let verts = ec.realized(face);
        let refs: Vec<&Point> = verts.iter().collect();
        let center = Point::barycenter(&refs);
        let dists: Vec<Rational> = plan
            .points
            .iter()
            .map(|p| squared_distance(&center, p))
            .collect();
        match crush_on(graph, &members, &dists) {
            CrushOutcome::Complete { .. } => {}
            CrushOutcome::Blocked { failed_at } => {
                return Err(GeometryError::CertificationFailed {
                    what: format!(
                        "the star set of face {face:?} ({} samples) stopped \
                         collapsing at order position {failed_at}",
                        members.len()
                    ),
                });
            }
        }
    }
    Ok(faces.len())
}
