//! Geodesic interpolation between two finite metric spaces.
//!
//! An optimal correspondence R turns its own pair set into a family of
//! spaces R_t with
//!
//! ```text
//! rho_t((x,y),(x',y')) = (1 - t) |xx'| + t |yy'|
//! ```
//!
//! which traces a shortest curve between X and Y in Gromov-Hausdorff space:
//! GH distances along the curve scale linearly with the parameter gap.

use thiserror::Error;

use crate::correspondence::{distortion, Correspondence};
use crate::metric::{DistanceSpace, FiniteMetricSpace, FinitePseudoMetricSpace};
use crate::solver::gh_exact;

/// Pair-count cap for [`GeodesicCurve::check`]: each sampled pair costs an
/// exact GH solve on a space of that many points.
pub const DEFAULT_CHECK_PAIR_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeodesicError {
    #[error("parameter t={0} outside [0,1]")]
    DomainError(f64),
    #[error("solver budget exhausted: optimality not certified (bounds [{lower}, {upper}])")]
    NotExact { lower: f64, upper: f64 },
    #[error("supplied correspondence is not optimal: dis/2 = {supplied}, GH distance = {optimal}")]
    NotOptimal { supplied: f64, optimal: f64 },
    #[error("curve has {pairs} pairs, exceeding the check limit of {limit}")]
    TooManyPairs { pairs: usize, limit: usize },
}

/// A shortest curve between two spaces through a certified optimal
/// correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicCurve {
    x: FiniteMetricSpace,
    y: FiniteMetricSpace,
    r: Correspondence,
    gh: f64,
}

/// Builds the curve through the solver's deterministic optimal witness.
pub fn make_geodesic(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<GeodesicCurve, GeodesicError> {
    let result = gh_exact(x, y, None);
    if !result.exact {
        return Err(GeodesicError::NotExact {
            lower: result.lower_bound,
            upper: result.upper_bound,
        });
    }
    Ok(GeodesicCurve {
        x: x.clone(),
        y: y.clone(),
        r: result.witness,
        gh: result.value,
    })
}

/// Builds the curve through a caller-chosen correspondence, certifying its
/// optimality against an independent exact solve. Any optimal witness gives
/// an equally valid geodesic.
pub fn make_geodesic_with(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    r: Correspondence,
) -> Result<GeodesicCurve, GeodesicError> {
    assert_eq!(r.n_left(), x.len());
    assert_eq!(r.n_right(), y.len());
    let supplied = 0.5 * distortion(x, y, r.relation());
    let result = gh_exact(x, y, None);
    if !result.exact {
        return Err(GeodesicError::NotExact {
            lower: result.lower_bound,
            upper: result.upper_bound,
        });
    }
    if (supplied - result.value).abs() > 1e-12 {
        return Err(GeodesicError::NotOptimal {
            supplied,
            optimal: result.value,
        });
    }
    Ok(GeodesicCurve {
        x: x.clone(),
        y: y.clone(),
        r,
        gh: result.value,
    })
}

/// One pairwise check of [`GeodesicCurve::check`].
#[derive(Debug, Clone, PartialEq)]
pub struct PairCheck {
    pub s: f64,
    pub t: f64,
    pub gh: f64,
    pub expected: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicReport {
    pub max_deviation: f64,
    pub checks: Vec<PairCheck>,
}

impl GeodesicCurve {
    pub fn endpoints(&self) -> (&FiniteMetricSpace, &FiniteMetricSpace) {
        (&self.x, &self.y)
    }

    pub fn witness(&self) -> &Correspondence {
        &self.r
    }

    pub fn gh(&self) -> f64 {
        self.gh
    }

    /// The space R_t: the witness pair set under rho_t, quotiented by zero
    /// distance. Endpoints go through the same pipeline, so `sample(0)`
    /// being isometric to X (and `sample(1)` to Y) is checked, not assumed.
    pub fn sample(&self, t: f64) -> Result<FiniteMetricSpace, GeodesicError> {
        if !(0.0..=1.0).contains(&t) || t.is_nan() {
            return Err(GeodesicError::DomainError(t));
        }
        let pairs = self.r.pairs();
        let k = pairs.len();
        let mut matrix = vec![vec![0.0f64; k]; k];
        for a in 0..k {
            let (i, j) = pairs[a];
            for b in (a + 1)..k {
                let (i2, j2) = pairs[b];
                let d = (1.0 - t) * self.x.dist(i, i2) + t * self.y.dist(j, j2);
                matrix[a][b] = d;
                matrix[b][a] = d;
            }
        }
        let labels = pairs
            .iter()
            .map(|&(i, j)| format!("({},{})", self.x.labels()[i], self.y.labels()[j]))
            .collect();
        let pseudo = FinitePseudoMetricSpace::new(matrix, Some(labels))
            .expect("rho_t is a convex combination of pseudometrics");
        Ok(pseudo.quotient().0)
    }

    pub fn check(&self, ts: &[f64]) -> Result<GeodesicReport, GeodesicError> {
        self.check_with_limit(ts, DEFAULT_CHECK_PAIR_LIMIT)
    }

    /// Solves every sampled pair exactly and reports the deviation of
    /// GH(R_s, R_t) from |s - t| * gh.
    pub fn check_with_limit(
        &self,
        ts: &[f64],
        limit: usize,
    ) -> Result<GeodesicReport, GeodesicError> {
        if self.r.len() > limit {
            return Err(GeodesicError::TooManyPairs {
                pairs: self.r.len(),
                limit,
            });
        }
        let samples: Vec<(f64, FiniteMetricSpace)> = ts
            .iter()
            .map(|&t| self.sample(t).map(|s| (t, s)))
            .collect::<Result<_, _>>()?;
        let mut checks = Vec::new();
        let mut max_deviation = 0.0f64;
        for a in 0..samples.len() {
            for b in (a + 1)..samples.len() {
                let (s, ref ss) = samples[a];
                let (t, ref ts_) = samples[b];
                let result = gh_exact(ss, ts_, None);
                if !result.exact {
                    return Err(GeodesicError::NotExact {
                        lower: result.lower_bound,
                        upper: result.upper_bound,
                    });
                }
                let expected = (s - t).abs() * self.gh;
                max_deviation = max_deviation.max((result.value - expected).abs());
                checks.push(PairCheck {
                    s,
                    t,
                    gh: result.value,
                    expected,
                });
            }
        }
        Ok(GeodesicReport {
            max_deviation,
            checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{is_isometric, DistanceSpace};

    fn space(m: &[&[f64]]) -> FiniteMetricSpace {
        FiniteMetricSpace::new(m.iter().map(|r| r.to_vec()).collect(), None).unwrap()
    }

    fn two_point(d: f64) -> FiniteMetricSpace {
        space(&[&[0.0, d], &[d, 0.0]])
    }

    #[test]
    fn degenerate_curve_between_identical_spaces() {
        let x = space(&[
            &[0.0, 1.0, 3.0],
            &[1.0, 0.0, 2.0],
            &[3.0, 2.0, 0.0],
        ]);
        let curve = make_geodesic(&x, &x).unwrap();
        assert_eq!(curve.gh(), 0.0);
        for t in [0.0, 0.3, 1.0] {
            let s = curve.sample(t).unwrap();
            assert!(is_isometric(&s, &x, 1e-12).is_some());
        }
    }

    #[test]
    fn forced_curve_from_point() {
        let x = space(&[
            &[0.0, 1.0, 4.0],
            &[1.0, 0.0, 3.5],
            &[4.0, 3.5, 0.0],
        ]);
        let p = FiniteMetricSpace::point("p");
        let curve = make_geodesic(&p, &x).unwrap();
        assert_eq!(curve.gh(), 2.0);
        assert_eq!(curve.witness().pairs(), &[(0, 0), (0, 1), (0, 2)]);
    }

    #[test]
    fn two_point_worked_example() {
        let curve = make_geodesic(&two_point(2.0), &two_point(5.0)).unwrap();
        assert_eq!(curve.gh(), 1.5);
        let mid = curve.sample(0.5).unwrap();
        assert_eq!(mid.len(), 2);
        assert_eq!(mid.dist(0, 1), 3.5);
    }

    #[test]
    fn endpoints_are_isometric_to_inputs() {
        let x = space(&[
            &[0.0, 1.0, 2.2],
            &[1.0, 0.0, 1.7],
            &[2.2, 1.7, 0.0],
        ]);
        let y = two_point(3.0);
        let curve = make_geodesic(&x, &y).unwrap();
        assert!(is_isometric(&curve.sample(0.0).unwrap(), &x, 1e-12).is_some());
        assert!(is_isometric(&curve.sample(1.0).unwrap(), &y, 1e-12).is_some());
        // interior samples keep every pair as a distinct point
        let mid = curve.sample(0.5).unwrap();
        assert_eq!(mid.len(), curve.witness().len());
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        let curve = make_geodesic(&two_point(2.0), &two_point(5.0)).unwrap();
        assert!(matches!(
            curve.sample(-0.1),
            Err(GeodesicError::DomainError(_))
        ));
        assert!(matches!(
            curve.sample(1.5),
            Err(GeodesicError::DomainError(_))
        ));
    }

    #[test]
    fn check_reports_linear_distances() {
        let curve = make_geodesic(&two_point(2.0), &two_point(5.0)).unwrap();
        let report = curve.check(&[0.0, 0.25, 0.5, 0.75, 1.0]).unwrap();
        assert!(report.max_deviation <= 1e-9, "{}", report.max_deviation);
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn check_honors_pair_limit() {
        let curve = make_geodesic(&two_point(2.0), &two_point(5.0)).unwrap();
        assert!(matches!(
            curve.check_with_limit(&[0.0, 1.0], 1),
            Err(GeodesicError::TooManyPairs { pairs: 2, limit: 1 })
        ));
    }

    #[test]
    fn witness_override_requires_optimality() {
        let x = two_point(2.0);
        let y = two_point(5.0);
        let swap = Correspondence::new(2, 2, [(0, 1), (1, 0)]).unwrap();
        assert!(make_geodesic_with(&x, &y, swap).is_ok()); // also optimal
        let full = Correspondence::full(2, 2);
        assert!(matches!(
            make_geodesic_with(&x, &y, full),
            Err(GeodesicError::NotOptimal { .. })
        ));
    }
}
