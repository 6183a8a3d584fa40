//! Exact geometric kernel: rational scalars, points, metrics, linear
//! programming, hull predicates, and the planar and spatial certificates
//! built on them.

pub mod apex;
pub mod hull;
pub mod lp;
pub mod metric;
pub mod point;
pub mod polygon;
pub mod rational;

pub use metric::Metric;
pub use point::Point;
