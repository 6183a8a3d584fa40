use thiserror::Error;

/// Data-dependent failures of geometric predicates.
///
/// Dimension mismatches and malformed constraint systems are programming
/// errors and panic instead; these variants cover conditions a caller can
/// only discover by asking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// `reduce_hull_intersection` requires hulls that actually meet.
    #[error("the two hulls are disjoint; nothing to reduce")]
    DisjointHulls,
    /// The polygon passed to `visible_edge` self-intersects or repeats vertices.
    #[error("polygon is not simple: {0}")]
    NonSimplePolygon(String),
    /// `visible_edge` requires the query point outside or on the polygon.
    #[error("query point lies strictly inside the polygon")]
    PointInsidePolygon,
    /// The requested comparison is only defined in ambient dimensions 2-4.
    #[error("unsupported ambient dimension {dim}")]
    UnsupportedDimension { dim: usize },
    /// Surface-specific reports require a closed surface.
    #[error("complex is not a closed surface")]
    NotClosedSurface,
    /// A guaranteed classification failed on concrete data. Carries a full
    /// dump of the offending instance; any occurrence is release-blocking.
    #[error("classification guarantee violated:\n{report}")]
    TheoremViolation { report: String },
    /// The coordinates do not realize the complex: some pair of faces
    /// overlaps beyond their common face, or a face is degenerate.
    #[error("coordinates do not embed the complex ({violations} violation(s))")]
    InvalidEmbedding { violations: usize },
    /// The scale passed to the sampling pipeline is outside the certified
    /// range for the embedding.
    #[error("scale out of range: {detail}")]
    EpsilonOutOfRange { detail: String },
    /// A density plan would emit more samples than the configured budget.
    #[error("sampling plan needs ~{projected} points, over the {cap} budget")]
    PlanTooLarge { projected: usize, cap: usize },
    /// A certified lower bound could not be pushed above zero within the
    /// resolution budget.
    #[error("certification failed: {what}")]
    CertificationFailed { what: String },
}
