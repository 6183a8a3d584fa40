//! Classifier for planar flag complexes that recognize as pseudomanifolds.

use crate::error::GeometryError;
use crate::geometry::rational::format_rational;
use crate::simplicial::{
    crosspolytope_dimension, pseudomanifold_report, rips_complex, rips_complex_on, PointCloud,
    SimplicialComplex,
};

/// What a planar cloud's flag complex (or an induced piece of it) turns out
/// to be. Normal pseudomanifolds of dimension 2 and up are guaranteed to be
/// crosspolytope boundaries; cycles are reported as such without singling
/// out the 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarClass {
    NotNormalPseudomanifold,
    OneDimensional,
    Crosspolytope { d: usize },
}

pub fn classify_planar_pseudomanifold(
    cloud: &PointCloud,
    subset: Option<&[usize]>,
) -> Result<PlanarClass, GeometryError> {
    let dim = cloud.dim().unwrap_or(2);
    if dim != 2 {
        return Err(GeometryError::UnsupportedDimension { dim });
    }
    let complex = match subset {
        None => rips_complex(cloud, None),
        Some(ids) => rips_complex_on(cloud, ids, None),
    };
    classify_complex(&complex, || instance_dump(cloud, subset, &complex))
}

/// The classification itself, decoupled from the cloud so the guarantee
/// failure path stays testable: it can never fire for genuine planar input.
fn classify_complex(
    complex: &SimplicialComplex,
    dump: impl FnOnce() -> String,
) -> Result<PlanarClass, GeometryError> {
    let report = pseudomanifold_report(complex);
    if !report.is_pseudomanifold {
        return Ok(PlanarClass::NotNormalPseudomanifold);
    }
    let d = report.dim.expect("pseudomanifolds are nonempty");
    if d == 1 {
        return Ok(PlanarClass::OneDimensional);
    }
    match crosspolytope_dimension(complex) {
        Some(cd) => {
            debug_assert_eq!(cd, d);
            Ok(PlanarClass::Crosspolytope { d: cd })
        }
        None => Err(GeometryError::TheoremViolation { report: dump() }),
    }
}

fn instance_dump(
    cloud: &PointCloud,
    subset: Option<&[usize]>,
    complex: &SimplicialComplex,
) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "normal pseudomanifold of dimension >= 2 that is not a crosspolytope boundary"
    );
    let _ = writeln!(
        out,
        "scale {} ({})",
        format_rational(cloud.scale()),
        if cloud.strict() { "strict" } else { "non-strict" }
    );
    for (i, p) in cloud.points().iter().enumerate() {
        let _ = writeln!(out, "  point {i}: {p}");
    }
    if let Some(ids) = subset {
        let _ = writeln!(out, "subset: {ids:?}");
    }
    let _ = writeln!(out, "maximal faces: {:?}", complex.maximal_faces());
    out
}
