//! Dimension-aware comparison of complex and shadow Betti numbers, with the
//! guarantees that hold in each ambient dimension recorded as findings
//! rather than panics.

use crate::error::GeometryError;
use crate::homology::homology;
use crate::simplicial::{rips_complex, PointCloud};
use num_bigint::BigInt;

/// The degree-0/1 comparison between R(X) and its shadow.
///
/// `violations` lists every guarantee for the ambient dimension that the
/// instance breaks. A nonempty list on valid input is a finding to escalate,
/// never to swallow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiComparison {
    pub dim: usize,
    pub complex_betti: [usize; 2],
    pub shadow_betti: [usize; 2],
    pub h1_torsion: Vec<BigInt>,
    pub violations: Vec<String>,
}

/// Computes beta_0 and beta_1 on both sides and applies the per-dimension
/// assertion matrix: beta_0 always matches; in the plane beta_1 matches and
/// degree-1 torsion vanishes; in dimension 3 the shadow's beta_1 is at most
/// the complex's; in dimension 4 values are reported with no assertion.
pub fn betti_consequences(cloud: &PointCloud) -> Result<BettiComparison, GeometryError> {
    let dim = cloud.dim().unwrap_or(2);
    if !(2..=4).contains(&dim) {
        return Err(GeometryError::UnsupportedDimension { dim });
    }
    let complex = rips_complex(cloud, Some(2));
    let profile = homology(&complex, 1);
    let shadow = crate::shadow::shadow_betti(cloud, 1);
    let complex_betti = [profile.betti[0], profile.betti[1]];
    let shadow_betti = [shadow[0], shadow[1]];
    let h1_torsion = profile.torsion[1].clone();
    let mut violations = Vec::new();
    if complex_betti[0] != shadow_betti[0] {
        violations.push(format!(
            "component counts differ: complex {} vs shadow {}",
            complex_betti[0], shadow_betti[0]
        ));
    }
    match dim {
        2 => {
            if complex_betti[1] != shadow_betti[1] {
                violations.push(format!(
                    "planar loop counts differ: complex {} vs shadow {}",
                    complex_betti[1], shadow_betti[1]
                ));
            }
            if !h1_torsion.is_empty() {
                violations.push(format!("planar degree-1 torsion {h1_torsion:?}"));
            }
        }
        3 => {
            if shadow_betti[1] > complex_betti[1] {
                violations.push(format!(
                    "shadow gained loops: complex {} vs shadow {}",
                    complex_betti[1], shadow_betti[1]
                ));
            }
        }
        _ => {}
    }
    Ok(BettiComparison {
        dim,
        complex_betti,
        shadow_betti,
        h1_torsion,
        violations,
    })
}
