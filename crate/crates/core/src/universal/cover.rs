//! The covering half of the proximity-complex certificate: every simplex
//! must live inside a single vertex-star sample set.
//!
//! Samples carry a carrier face; the star set of a complex vertex `v` holds
//! the samples whose carrier contains `v`. A clique of samples lies in a
//! common star set exactly when the carriers share a vertex, and checking
//! the maximal cliques covers all simplices at once.

use super::embedded::EmbeddedComplex;
use super::plan::SamplingPlan;
use crate::simplicial::rips::{adjacency_of, maximal_cliques};
use crate::simplicial::PointCloud;
use crate::geometry::Metric;

/// A maximal clique whose carriers share no complex vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub clique: Vec<usize>,
}

/// Audit the star cover of a sampled proximity complex: `None` when every
/// simplex of the proximity complex at the plan's scale sits inside the
/// star sample set of some complex vertex, otherwise a straddling clique.
pub fn verify_cover_condition(
    ec: &EmbeddedComplex,
    plan: &SamplingPlan,
) -> Option<CoverWitness> {
    let nv = ec.coords().len();
    assert!(nv <= 64, "carrier masks use one machine word");
    let masks: Vec<u64> = plan
        .carriers
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let cloud = PointCloud::new(
        plan.points.clone(),
        plan.epsilon.clone(),
        true,
        Metric::Euclidean,
    );
    let ids: Vec<usize> = (0..cloud.len()).collect();
    let graph = adjacency_of(&cloud, &ids);
    let cliques = maximal_cliques(&graph);
    verify_cover(&cliques, &masks)
}

/// Check the cover condition over precomputed maximal cliques.
/// `carrier_masks[i]` is the bitmask of complex vertices in sample `i`'s
/// carrier face.
pub(crate) fn verify_cover(
    cliques: &[Vec<usize>],
    carrier_masks: &[u64],
) -> Option<CoverWitness> {
    for clique in cliques {
        let mut common = u64::MAX;
        for &x in clique {
            common &= carrier_masks[x];
        }
        if common == 0 {
            return Some(CoverWitness { clique: clique.clone() });
        }
    }
    None
}
