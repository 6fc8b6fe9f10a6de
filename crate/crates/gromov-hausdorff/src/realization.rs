//! Gluing a correspondence into a pseudometric on the disjoint union and
//! realizing both spaces inside a common metric space.
//!
//! For a correspondence R with distortion dis R, the cross distance
//!
//! ```text
//! rho_R(x, y) = min over (x', y') in R of |xx'| + |yy'| + dis R / 2
//! ```
//!
//! extends the two metrics to a pseudometric on X u Y whose part-to-part
//! Hausdorff distance is exactly dis R / 2. Quotienting by zero distance
//! yields a metric space Z with isometric copies of X and Y; taking R
//! optimal realizes the GH distance as a Hausdorff distance.

use thiserror::Error;

use crate::correspondence::{distortion, Correspondence};
use crate::hausdorff::{hausdorff, hausdorff_between_parts};
use crate::metric::{
    DistanceSpace, FiniteMetricSpace, FinitePseudoMetricSpace, Subset,
};
use crate::solver::{gh_exact, GHResult};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error(
        "solver budget exhausted: GH distance only bracketed in [{lower}, {upper}], realization would not certify"
    )]
    NotExact { lower: f64, upper: f64 },
}

/// The disjoint-union pseudometric induced by a correspondence.
/// X indices occupy the first block, Y indices the second.
#[derive(Debug, Clone, PartialEq)]
pub struct Gluing {
    pub space: FinitePseudoMetricSpace,
    pub correspondence: Correspondence,
    pub half_distortion: f64,
}

impl Gluing {
    pub fn part_x(&self) -> Subset {
        Subset::new(self.space.len(), 0..self.correspondence.n_left()).unwrap()
    }

    pub fn part_y(&self) -> Subset {
        let n = self.correspondence.n_left();
        Subset::new(self.space.len(), n..self.space.len()).unwrap()
    }
}

/// A common ambient space with isometric copies of X and Y.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub z: FiniteMetricSpace,
    pub embed_x: Vec<usize>,
    pub embed_y: Vec<usize>,
    pub achieved: f64,
    pub witness: Correspondence,
}

/// Extends the metrics of X and Y to the disjoint union via the minimum of
/// |xx'| + |yy'| + dis R / 2 over the pairs of R. Works for any
/// correspondence, optimal or not.
pub fn glue(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    r: &Correspondence,
) -> Gluing {
    assert_eq!(r.n_left(), x.len());
    assert_eq!(r.n_right(), y.len());
    let half = 0.5 * distortion(x, y, r.relation());
    let n = x.len();
    let m = y.len();
    let total = n + m;
    let mut matrix = vec![vec![0.0f64; total]; total];
    for i in 0..n {
        for j in 0..n {
            matrix[i][j] = x.dist(i, j);
        }
    }
    for i in 0..m {
        for j in 0..m {
            matrix[n + i][n + j] = y.dist(i, j);
        }
    }
    for i in 0..n {
        for j in 0..m {
            let cross = r
                .pairs()
                .iter()
                .map(|&(a, b)| x.dist(i, a) + y.dist(j, b) + half)
                .fold(f64::INFINITY, f64::min);
            matrix[i][n + j] = cross;
            matrix[n + j][i] = cross;
        }
    }
    let mut labels: Vec<String> = x.labels().iter().map(|l| format!("X:{l}")).collect();
    labels.extend(y.labels().iter().map(|l| format!("Y:{l}")));
    let space = FinitePseudoMetricSpace::new(matrix, Some(labels))
        .expect("rho_R is a pseudometric");
    Gluing {
        space,
        correspondence: r.clone(),
        half_distortion: half,
    }
}

/// Full realization pipeline: exact solve, glue along the optimal witness,
/// quotient by zero distance. Fails when the solver cannot certify
/// exactness within its budget.
pub fn realize(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> Result<Realization, RealizeError> {
    realize_from(x, y, gh_exact(x, y, None))
}

/// Same as [`realize`] but reusing an already-computed solver result.
pub fn realize_from(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    gh: GHResult,
) -> Result<Realization, RealizeError> {
    if !gh.exact {
        return Err(RealizeError::NotExact {
            lower: gh.lower_bound,
            upper: gh.upper_bound,
        });
    }
    let gluing = glue(x, y, &gh.witness);
    let achieved =
        hausdorff_between_parts(&gluing.space, &gluing.part_x(), &gluing.part_y());
    let (z, proj) = gluing.space.quotient();
    let n = x.len();
    Ok(Realization {
        z,
        embed_x: proj[..n].to_vec(),
        embed_y: proj[n..].to_vec(),
        achieved,
        witness: gh.witness,
    })
}

/// Post-hoc certification of a realization against its source spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct RealizationReport {
    pub embed_x_isometric: bool,
    pub embed_y_isometric: bool,
    pub hausdorff_of_images: f64,
    pub achieved_matches: bool,
    pub gh_value: Option<f64>,
    pub gh_matches: Option<bool>,
    pub violations: Vec<String>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-checks embedding isometry exactly, recomputes the Hausdorff distance
/// between the images, and compares both with the recorded value and with an
/// independently recomputed GH distance (skipped if that solve does not
/// certify).
pub fn verify_realization(
    r: &Realization,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
) -> RealizationReport {
    let mut violations = Vec::new();
    let check_embedding = |space: &FiniteMetricSpace, map: &[usize], name: &str,
                           violations: &mut Vec<String>| {
        if map.len() != space.len() {
            violations.push(format!(
                "{name}: embedding maps {} points, space has {}",
                map.len(),
                space.len()
            ));
            return false;
        }
        let mut ok = true;
        for i in 0..space.len() {
            for j in 0..space.len() {
                if map[i] >= r.z.len() || map[j] >= r.z.len() {
                    violations.push(format!("{name}: image index out of range"));
                    return false;
                }
                let zd = r.z.dist(map[i], map[j]);
                let sd = space.dist(i, j);
                if zd != sd {
                    violations.push(format!(
                        "{name}: distance ({i},{j}) maps to {zd}, expected {sd}"
                    ));
                    ok = false;
                }
            }
        }
        ok
    };
    let embed_x_isometric = check_embedding(x, &r.embed_x, "embed_x", &mut violations);
    let embed_y_isometric = check_embedding(y, &r.embed_y, "embed_y", &mut violations);

    let image = |map: &[usize]| Subset::new(r.z.len(), map.iter().copied());
    let hausdorff_of_images = match (image(&r.embed_x), image(&r.embed_y)) {
        (Ok(a), Ok(b)) => hausdorff(&r.z, &a, &b),
        _ => f64::NAN,
    };
    let achieved_matches = (hausdorff_of_images - r.achieved).abs() <= 1e-12;
    if !achieved_matches {
        violations.push(format!(
            "achieved mismatch: recorded {}, recomputed {}",
            r.achieved, hausdorff_of_images
        ));
    }

    let gh = gh_exact(x, y, None);
    let (gh_value, gh_matches) = if gh.exact {
        let ok = (gh.value - r.achieved).abs() <= 1e-12;
        if !ok {
            violations.push(format!(
                "GH mismatch: recomputed {}, realization achieves {}",
                gh.value, r.achieved
            ));
        }
        (Some(gh.value), Some(ok))
    } else {
        (None, None)
    };

    RealizationReport {
        embed_x_isometric,
        embed_y_isometric,
        hausdorff_of_images,
        achieved_matches,
        gh_value,
        gh_matches,
        violations,
    }
}
