//! Exact Gromov-Hausdorff distances between finite metric spaces.
//!
//! The distance between two finite metric spaces is half the minimal
//! distortion over all correspondences between them; this crate computes it
//! exactly by branch-and-bound, returns an optimal correspondence as a
//! certificate, and makes the surrounding constructions executable:
//!
//! - [`metric`]: validated metric and pseudometric spaces, quotients by zero
//!   distance, subspaces, exact isometry testing.
//! - [`hausdorff`]: one-sided and symmetric Hausdorff distances between
//!   subsets of a common space.
//! - [`correspondence`]: relations, correspondences, distortion, the
//!   max-metric distance on relation space, and exhaustive enumeration.
//! - [`solver`]: the exact search ([`gh_exact`]), cheap bounds, and the
//!   enumeration oracle ([`gh_oracle`]).
//! - [`realization`]: the gluing pseudometric on the disjoint union and the
//!   common ambient space realizing the distance as a Hausdorff distance.
//! - [`geodesic`]: shortest curves through an optimal correspondence, with
//!   sampling and a linearity checker.
//! - [`io`] and [`cli`]: file formats and the `ghd` command-line tool.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod correspondence;
pub mod geodesic;
pub mod hausdorff;
pub mod io;
pub mod metric;
pub mod realization;
pub mod solver;

pub use correspondence::{
    distortion, enumerate_correspondences, relation_distance, Correspondence, Relation,
};
pub use geodesic::{make_geodesic, make_geodesic_with, GeodesicCurve};
pub use hausdorff::{hausdorff, hausdorff_between_parts, one_sided, point_to_set};
pub use metric::{
    is_isometric, DistanceSpace, FiniteMetricSpace, FinitePseudoMetricSpace, MetricError,
    Subset,
};
pub use realization::{glue, realize, verify_realization, Gluing, Realization};
pub use solver::{gh_bounds, gh_exact, gh_oracle, GHResult};
