//! Certified bracket on the critical proximity scale of an embedded complex.
//!
//! The threshold is the infimum, over families of faces with empty common
//! intersection, of the minimum transversal diameter. Restricting to
//! minimal empty families loses nothing: dropping members never increases
//! a family's transversal diameter, and every empty family contains a
//! minimal one. Helly's theorem in the ambient dimension caps the size of
//! minimal families (see the enumeration module), so the search space is
//! finite and small.

use super::embedded::{validate_embedding, EmbeddedComplex};
use super::families::enumerate_minimal_empty_families;
use super::transversal::{min_diameter_transversal, TransversalSolution};
use crate::error::GeometryError;
use crate::geometry::rational::Rational;

#[derive(Debug, Clone)]
pub struct EpsilonBracket {
    /// Certified lower bound; `None` when no empty family exists (every
    /// family of faces meets, so the threshold is unbounded).
    pub lower: Option<Rational>,
    /// Smallest achieved transversal diameter, an upper bound.
    pub upper: Option<Rational>,
    /// One solved transversal per minimal empty family.
    pub solutions: Vec<TransversalSolution>,
}

impl EpsilonBracket {
    /// Width of the bracket, when both ends exist.
    pub fn width(&self) -> Option<Rational> {
        match (&self.lower, &self.upper) {
            (Some(l), Some(u)) => Some(u - l),
            _ => None,
        }
    }
}

/// Solve every minimal empty family and aggregate the bracket. Requires a
/// valid embedding, since both the family truncation and the geometric
/// meaning of the threshold depend on realized faces meeting exactly in
/// realized shared faces.
pub fn epsilon_bracket(ec: &EmbeddedComplex) -> Result<EpsilonBracket, GeometryError> {
    let report = validate_embedding(ec);
    if !report.valid {
        return Err(GeometryError::InvalidEmbedding { violations: report.violations.len() });
    }
    let cap = ec.ambient_dim() + 1;
    let families = enumerate_minimal_empty_families(ec.complex(), cap.max(2));
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    let mut solutions = Vec::with_capacity(families.len());
    for family in &families {
        let sol = min_diameter_transversal(family, ec);
        let up = sol.value_upper();
        upper = Some(match upper.take() {
            Some(u) => u.min(up),
            None => up,
        });
        lower = Some(match lower.take() {
            Some(l) => l.min(sol.certified_gap.clone()),
            None => sol.certified_gap.clone(),
        });
        solutions.push(sol);
    }
    Ok(EpsilonBracket { lower, upper, solutions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{rat, sqrt_lower, sqrt_upper};
    use crate::geometry::Point;
    use crate::simplicial::SimplicialComplex;
    use num_traits::One;

    fn unit_square() -> EmbeddedComplex {
        EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![0, 3],
            ]),
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[0, 1]),
            ],
        )
    }

    #[test]
    fn square_boundary_brackets_exactly_one() {
        let bracket = epsilon_bracket(&unit_square()).unwrap();
        assert_eq!(bracket.lower, Some(Rational::one()));
        assert_eq!(bracket.upper, Some(Rational::one()));
        assert_eq!(bracket.solutions.len(), 16);
    }

    #[test]
    fn triangle_boundary_brackets_one_half() {
        let ec = EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::new(vec![rat(1, 2), rat(433, 500)]),
            ],
        );
        let bracket = epsilon_bracket(&ec).unwrap();
        let lower = bracket.lower.clone().unwrap();
        let upper = bracket.upper.clone().unwrap();
        assert!(lower <= upper);
        let half = rat(1, 2);
        let tol = rat(1, 1000);
        assert!(lower > &half - &tol, "lower {lower}");
        assert!(upper < &half + &tol, "upper {upper}");
        assert_eq!(bracket.solutions.len(), 7);
    }

    #[test]
    fn a_single_vertex_has_no_threshold() {
        let ec = EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![vec![0]]),
            vec![Point::from_ints(&[0])],
        );
        let bracket = epsilon_bracket(&ec).unwrap();
        assert!(bracket.lower.is_none());
        assert!(bracket.upper.is_none());
        assert!(bracket.solutions.is_empty());
    }

    #[test]
    fn a_solid_triangle_still_has_vertex_separation_families() {
        // filling the triangle keeps all seven empty families of its
        // boundary; the solid face meets everything and adds none
        let ec = EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![vec![0, 1, 2]]),
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[2, 0]),
                Point::from_ints(&[0, 2]),
            ],
        );
        let bracket = epsilon_bracket(&ec).unwrap();
        assert_eq!(bracket.solutions.len(), 7);
        let lower = bracket.lower.unwrap();
        let upper = bracket.upper.unwrap();
        // the edge triple's mean-square bound is exactly 1 here (the
        // stationary triple sits at (1/2,0), (0,1/2), (1,1) with pair
        // power sum 3), and it is the weakest of the seven certificates
        assert_eq!(lower, Rational::one());
        assert!(upper >= lower);
        assert!(upper < rat(3, 2));
    }

    #[test]
    fn overlapping_realization_is_rejected() {
        // two segments crossing at an interior point
        let ec = EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![vec![0, 1], vec![2, 3]]),
            vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[2, 2]),
                Point::from_ints(&[0, 2]),
                Point::from_ints(&[2, 0]),
            ],
        );
        match epsilon_bracket(&ec) {
            Err(GeometryError::InvalidEmbedding { violations }) => assert!(violations >= 1),
            other => panic!("expected invalid embedding, got {other:?}"),
        }
    }

    #[test]
    fn segment_pair_threshold_is_the_gap_distance() {
        // disjoint collinear segments [0,1] and [2,3] on a line
        let ec = EmbeddedComplex::new(
            SimplicialComplex::from_faces(vec![vec![0, 1], vec![2, 3]]),
            vec![
                Point::from_ints(&[0]),
                Point::from_ints(&[1]),
                Point::from_ints(&[2]),
                Point::from_ints(&[3]),
            ],
        );
        let bracket = epsilon_bracket(&ec).unwrap();
        // closest pair: the inner endpoints at distance 1
        assert_eq!(bracket.lower, Some(sqrt_lower(&Rational::one())));
        assert_eq!(bracket.upper, Some(sqrt_upper(&Rational::one())));
    }
}
