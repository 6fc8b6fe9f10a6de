//! Hausdorff distances between nonempty subsets of a common space.
//!
//! All sup/inf pairs collapse to max/min over finite index sets, so every
//! value here is exact up to the precision of the stored distances.

use crate::metric::{DistanceSpace, FinitePseudoMetricSpace, Subset};

/// Distance from a point to a nonempty subset: min over the subset.
pub fn point_to_set<S: DistanceSpace>(space: &S, x: usize, a: &Subset) -> f64 {
    a.indices()
        .iter()
        .map(|&p| space.dist(x, p))
        .fold(f64::INFINITY, f64::min)
}

/// One-sided deviation of `a` from `b`: max over a of the point-to-set distance.
pub fn one_sided<S: DistanceSpace>(space: &S, a: &Subset, b: &Subset) -> f64 {
    a.indices()
        .iter()
        .map(|&p| point_to_set(space, p, b))
        .fold(0.0f64, f64::max)
}

/// Symmetric Hausdorff distance: max of the two one-sided deviations.
pub fn hausdorff<S: DistanceSpace>(space: &S, a: &Subset, b: &Subset) -> f64 {
    one_sided(space, a, b).max(one_sided(space, b, a))
}

/// Hausdorff distance between the two parts of a gluing pseudometric,
/// measured after the zero-distance quotient.
///
/// The quotient is never materialized: identifying points at distance zero
/// changes no sup-inf value, so the formula is evaluated directly on the
/// pseudometric.
pub fn hausdorff_between_parts(
    glued: &FinitePseudoMetricSpace,
    part_x: &Subset,
    part_y: &Subset,
) -> f64 {
    debug_assert_eq!(part_x.len() + part_y.len(), glued.len());
    hausdorff(glued, part_x, part_y)
}
