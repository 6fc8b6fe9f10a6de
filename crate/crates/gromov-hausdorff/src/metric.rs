//! Validated finite metric and pseudometric spaces.
//!
//! A space is a square distance matrix plus point labels. Construction runs
//! the full axiom check (symmetry, zero diagonal, nonnegativity, triangle
//! inequality, and for metric spaces strict positivity off the diagonal) and
//! reports the first violated axiom with the offending indices. Everything
//! downstream assumes a validated space and never re-checks.

use thiserror::Error;

/// Absolute tolerance for triangle-inequality and symmetry checks.
///
/// Inputs come from decimal files and convex combinations of stored
/// distances; the constructions here never accumulate more than a couple of
/// additions, so 1e-9 is generous.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({i},{j}) is not finite")]
    NonFinite { i: usize, j: usize },
    #[error("negative entry {value} at ({i},{j})")]
    NegativeEntry { i: usize, j: usize, value: f64 },
    #[error("nonzero diagonal entry {value} at ({i},{i})")]
    NonzeroDiagonal { i: usize, value: f64 },
    #[error("asymmetric entries at ({i},{j}): {a} vs {b}")]
    Asymmetric { i: usize, j: usize, a: f64, b: f64 },
    #[error("triangle inequality violated at ({i},{j},{k}): d(i,k)={ik} > d(i,j)+d(j,k)={sum}")]
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
        ik: f64,
        sum: f64,
    },
    #[error("zero off-diagonal entry at ({i},{j})")]
    ZeroOffDiagonal { i: usize, j: usize },
    #[error("expected {n} labels, got {got}")]
    LabelCount { n: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubsetError {
    #[error("subset is empty")]
    Empty,
    #[error("index {index} out of range for a space of {n} points")]
    OutOfRange { index: usize, n: usize },
}

/// Read access to a validated distance matrix. Implemented by both metric
/// and pseudometric spaces so that Hausdorff-type operations work on either.
pub trait DistanceSpace {
    fn len(&self) -> usize;
    fn dist(&self, i: usize, j: usize) -> f64;
    fn labels(&self) -> &[String];

    fn is_empty(&self) -> bool {
        false // validated spaces have at least one point
    }

    /// Largest pairwise distance.
    fn diameter(&self) -> f64 {
        let n = self.len();
        let mut d = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                d = d.max(self.dist(i, j));
            }
        }
        d
    }

    /// Max distance from point `i` to any other point.
    fn eccentricity(&self, i: usize) -> f64 {
        (0..self.len()).fold(0.0f64, |acc, j| acc.max(self.dist(i, j)))
    }

    fn matrix(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.dist(i, j)).collect())
            .collect()
    }
}

/// A finite metric space: distinct points at strictly positive distances.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    n: usize,
    labels: Vec<String>,
    dist: Vec<f64>, // row-major n*n
}

/// A finite pseudometric space: off-diagonal zeros permitted.
#[derive(Debug, Clone, PartialEq)]
pub struct FinitePseudoMetricSpace {
    n: usize,
    labels: Vec<String>,
    dist: Vec<f64>,
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

fn validate(
    matrix: &[Vec<f64>],
    labels: Option<Vec<String>>,
    tol: f64,
    allow_zero_off_diagonal: bool,
) -> Result<(usize, Vec<String>, Vec<f64>), MetricError> {
    let n = matrix.len();
    if n == 0 {
        return Err(MetricError::Empty);
    }
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(MetricError::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
    }
    let labels = match labels {
        Some(l) => {
            if l.len() != n {
                return Err(MetricError::LabelCount { n, got: l.len() });
            }
            for (i, a) in l.iter().enumerate() {
                if l[..i].contains(a) {
                    return Err(MetricError::DuplicateLabel(a.clone()));
                }
            }
            l
        }
        None => default_labels(n),
    };
    for i in 0..n {
        for j in 0..n {
            let v = matrix[i][j];
            if !v.is_finite() {
                return Err(MetricError::NonFinite { i, j });
            }
            if v < 0.0 {
                return Err(MetricError::NegativeEntry { i, j, value: v });
            }
        }
    }
    for i in 0..n {
        if matrix[i][i] != 0.0 {
            return Err(MetricError::NonzeroDiagonal {
                i,
                value: matrix[i][i],
            });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (matrix[i][j] - matrix[j][i]).abs() > tol {
                return Err(MetricError::Asymmetric {
                    i,
                    j,
                    a: matrix[i][j],
                    b: matrix[j][i],
                });
            }
            if !allow_zero_off_diagonal && matrix[i][j] == 0.0 {
                return Err(MetricError::ZeroOffDiagonal { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if j == i {
                continue;
            }
            for k in 0..n {
                let sum = matrix[i][j] + matrix[j][k];
                if matrix[i][k] > sum + tol {
                    return Err(MetricError::TriangleViolation {
                        i,
                        j,
                        k,
                        ik: matrix[i][k],
                        sum,
                    });
                }
            }
        }
    }
    let flat = matrix.iter().flatten().copied().collect();
    Ok((n, labels, flat))
}

impl FiniteMetricSpace {
    pub fn new(matrix: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self, MetricError> {
        Self::with_tolerance(matrix, labels, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        matrix: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        tol: f64,
    ) -> Result<Self, MetricError> {
        let (n, labels, dist) = validate(&matrix, labels, tol, false)?;
        Ok(Self { n, labels, dist })
    }

    /// The one-point space.
    pub fn point(label: &str) -> Self {
        Self {
            n: 1,
            labels: vec![label.to_string()],
            dist: vec![0.0],
        }
    }

    /// Restriction to a subset of points; labels are inherited.
    pub fn subspace(&self, subset: &Subset) -> FiniteMetricSpace {
        let idx = subset.indices();
        let n = idx.len();
        let mut dist = Vec::with_capacity(n * n);
        for &i in idx {
            for &j in idx {
                dist.push(self.dist(i, j));
            }
        }
        FiniteMetricSpace {
            n,
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            dist,
        }
    }

    /// Relabel-and-reorder copy under a permutation (used in tests and by
    /// isometry checks): point `i` of the result is point `perm[i]` of self.
    pub fn permuted(&self, perm: &[usize]) -> FiniteMetricSpace {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut dist = Vec::with_capacity(n * n);
        for &i in perm {
            for &j in perm {
                dist.push(self.dist(i, j));
            }
        }
        FiniteMetricSpace {
            n,
            labels: perm.iter().map(|&i| self.labels[i].clone()).collect(),
            dist,
        }
    }
}

impl FinitePseudoMetricSpace {
    pub fn new(matrix: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self, MetricError> {
        Self::with_tolerance(matrix, labels, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(
        matrix: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        tol: f64,
    ) -> Result<Self, MetricError> {
        let (n, labels, dist) = validate(&matrix, labels, tol, true)?;
        Ok(Self { n, labels, dist })
    }

    /// Collapse classes of points at exactly zero distance.
    ///
    /// Returns the quotient metric space and the projection mapping each
    /// original index to its class index. Induced distances are taken from
    /// class representatives; by the triangle inequality any representatives
    /// give the same value.
    pub fn quotient(&self) -> (FiniteMetricSpace, Vec<usize>) {
        let n = self.n;
        let mut proj = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            let class = reps.iter().position(|&r| self.dist(r, i) == 0.0);
            match class {
                Some(c) => proj[i] = c,
                None => {
                    proj[i] = reps.len();
                    reps.push(i);
                }
            }
        }
        let k = reps.len();
        let mut dist = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                dist.push(self.dist(a, b));
            }
        }
        let space = FiniteMetricSpace {
            n: k,
            labels: reps.iter().map(|&r| self.labels[r].clone()).collect(),
            dist,
        };
        (space, proj)
    }
}

macro_rules! impl_distance_space {
    ($t:ty) => {
        impl DistanceSpace for $t {
            fn len(&self) -> usize {
                self.n
            }
            fn dist(&self, i: usize, j: usize) -> f64 {
                self.dist[i * self.n + j]
            }
            fn labels(&self) -> &[String] {
                &self.labels
            }
        }
    };
}

impl_distance_space!(FiniteMetricSpace);
impl_distance_space!(FinitePseudoMetricSpace);

impl From<FiniteMetricSpace> for FinitePseudoMetricSpace {
    fn from(s: FiniteMetricSpace) -> Self {
        FinitePseudoMetricSpace {
            n: s.n,
            labels: s.labels,
            dist: s.dist,
        }
    }
}

/// A nonempty set of point indices of a space, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    indices: Vec<usize>,
}

impl Subset {
    pub fn new(
        space_len: usize,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, SubsetError> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(SubsetError::Empty);
        }
        if let Some(&bad) = v.iter().find(|&&i| i >= space_len) {
            return Err(SubsetError::OutOfRange {
                index: bad,
                n: space_len,
            });
        }
        Ok(Self { indices: v })
    }

    pub fn full(space_len: usize) -> Self {
        Self {
            indices: (0..space_len).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Exact isometry test between two finite metric spaces.
///
/// Backtracking over partial bijections, pruned by sorted-row-multiset
/// compatibility. Returns a witness permutation `perm` with
/// `y.dist(perm[i], perm[j]) == x.dist(i, j)` (within `tol`) when the spaces
/// are isometric. Practical to n around 12; intended for small test inputs.
pub fn is_isometric(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    tol: f64,
) -> Option<Vec<usize>> {
    let n = x.len();
    if n != y.len() {
        return None;
    }
    let row_key = |s: &FiniteMetricSpace, i: usize| {
        let mut r: Vec<f64> = (0..n).map(|j| s.dist(i, j)).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        r
    };
    let x_rows: Vec<Vec<f64>> = (0..n).map(|i| row_key(x, i)).collect();
    let y_rows: Vec<Vec<f64>> = (0..n).map(|i| row_key(y, i)).collect();
    let rows_match = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(u, v)| (u - v).abs() <= tol);

    // candidates[i] = y-points whose row multiset matches x-point i
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| rows_match(&x_rows[i], &y_rows[j]))
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }

    fn backtrack(
        depth: usize,
        x: &FiniteMetricSpace,
        y: &FiniteMetricSpace,
        candidates: &[Vec<usize>],
        used: &mut [bool],
        perm: &mut Vec<usize>,
        tol: f64,
    ) -> bool {
        let n = x.len();
        if depth == n {
            return true;
        }
        for &j in &candidates[depth] {
            if used[j] {
                continue;
            }
            if perm
                .iter()
                .enumerate()
                .all(|(e, &je)| (x.dist(depth, e) - y.dist(j, je)).abs() <= tol)
            {
                used[j] = true;
                perm.push(j);
                if backtrack(depth + 1, x, y, candidates, used, perm, tol) {
                    return true;
                }
                perm.pop();
                used[j] = false;
            }
        }
        false
    }

    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    if backtrack(0, x, y, &candidates, &mut used, &mut perm, tol) {
        Some(perm)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(m: &[&[f64]]) -> FiniteMetricSpace {
        FiniteMetricSpace::new(m.iter().map(|r| r.to_vec()).collect(), None).unwrap()
    }

    #[test]
    fn accepts_smallest_nondegenerate_space() {
        let s = space(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.dist(0, 1), 1.0);
    }

    #[test]
    fn rejects_asymmetric_matrix() {
        let err = FiniteMetricSpace::new(vec![vec![0.0, 1.0], vec![2.0, 0.0]], None).unwrap_err();
        assert!(matches!(err, MetricError::Asymmetric { i: 0, j: 1, .. }));
    }

    #[test]
    fn rejects_triangle_violation() {
        let err = FiniteMetricSpace::new(
            vec![
                vec![0.0, 1.0, 3.0],
                vec![1.0, 0.0, 1.0],
                vec![3.0, 1.0, 0.0],
            ],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, MetricError::TriangleViolation { .. }));
    }

    #[test]
    fn rejects_zero_off_diagonal_for_metric_only() {
        let m = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        assert!(matches!(
            FiniteMetricSpace::new(m.clone(), None),
            Err(MetricError::ZeroOffDiagonal { i: 0, j: 1 })
        ));
        assert!(FinitePseudoMetricSpace::new(m, None).is_ok());
    }

    #[test]
    fn rejects_negative_and_nonfinite() {
        let err = FiniteMetricSpace::new(vec![vec![0.0, -1.0], vec![-1.0, 0.0]], None).unwrap_err();
        assert!(matches!(err, MetricError::NegativeEntry { .. }));
        let err =
            FiniteMetricSpace::new(vec![vec![0.0, f64::NAN], vec![1.0, 0.0]], None).unwrap_err();
        assert!(matches!(err, MetricError::NonFinite { .. }));
    }

    #[test]
    fn rejects_bad_labels() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let err = FiniteMetricSpace::new(m.clone(), Some(vec!["a".into()])).unwrap_err();
        assert!(matches!(err, MetricError::LabelCount { .. }));
        let err = FiniteMetricSpace::new(m, Some(vec!["a".into(), "a".into()])).unwrap_err();
        assert!(matches!(err, MetricError::DuplicateLabel(_)));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(FiniteMetricSpace::point("p").diameter(), 0.0);
        assert_eq!(space(&[&[0.0, 5.0], &[5.0, 0.0]]).diameter(), 5.0);
        let s = space(&[
            &[0.0, 1.0, 2.0],
            &[1.0, 0.0, 2.0],
            &[2.0, 2.0, 0.0],
        ]);
        assert_eq!(s.diameter(), 2.0);
    }

    #[test]
    fn quotient_collapses_zero_classes() {
        let p =
            FinitePseudoMetricSpace::new(vec![vec![0.0, 0.0], vec![0.0, 0.0]], None).unwrap();
        let (q, proj) = p.quotient();
        assert_eq!(q.len(), 1);
        assert_eq!(proj, vec![0, 0]);

        let p = FinitePseudoMetricSpace::new(
            vec![
                vec![0.0, 0.0, 2.0],
                vec![0.0, 0.0, 2.0],
                vec![2.0, 2.0, 0.0],
            ],
            None,
        )
        .unwrap();
        let (q, proj) = p.quotient();
        assert_eq!(q.len(), 2);
        assert_eq!(proj, vec![0, 0, 1]);
        assert_eq!(q.dist(0, 1), 2.0);
    }

    #[test]
    fn quotient_of_metric_space_is_identity() {
        let s = space(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let (q, proj) = FinitePseudoMetricSpace::from(s.clone()).quotient();
        assert_eq!(proj, vec![0, 1]);
        assert_eq!(q, s);
    }

    #[test]
    fn quotient_composition_reproduces_distances() {
        let p = FinitePseudoMetricSpace::new(
            vec![
                vec![0.0, 0.0, 2.0, 3.0],
                vec![0.0, 0.0, 2.0, 3.0],
                vec![2.0, 2.0, 0.0, 1.5],
                vec![3.0, 3.0, 1.5, 0.0],
            ],
            None,
        )
        .unwrap();
        let (q, proj) = p.quotient();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(q.dist(proj[i], proj[j]), p.dist(i, j));
            }
        }
    }

    #[test]
    fn subspace_examples() {
        let s = space(&[
            &[0.0, 1.0, 3.0],
            &[1.0, 0.0, 2.0],
            &[3.0, 2.0, 0.0],
        ]);
        let full = s.subspace(&Subset::full(3));
        assert_eq!(full, s);
        let single = s.subspace(&Subset::new(3, [1]).unwrap());
        assert_eq!(single.len(), 1);
        let pair = s.subspace(&Subset::new(3, [0, 2]).unwrap());
        assert_eq!(pair.dist(0, 1), 3.0);
        assert_eq!(pair.labels(), &["p0".to_string(), "p2".to_string()]);
    }

    #[test]
    fn subset_validation() {
        assert!(matches!(
            Subset::new(3, std::iter::empty()),
            Err(SubsetError::Empty)
        ));
        assert!(matches!(
            Subset::new(3, [0, 5]),
            Err(SubsetError::OutOfRange { index: 5, n: 3 })
        ));
        assert_eq!(Subset::new(3, [2, 0, 2]).unwrap().indices(), &[0, 2]);
    }

    #[test]
    fn isometry_finds_permutation() {
        let s = space(&[
            &[0.0, 1.0, 3.0],
            &[1.0, 0.0, 2.0],
            &[3.0, 2.0, 0.0],
        ]);
        let t = s.permuted(&[2, 0, 1]);
        let perm = is_isometric(&s, &t, DEFAULT_TOLERANCE).expect("isometric");
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.dist(perm[i], perm[j]), s.dist(i, j));
            }
        }
    }

    #[test]
    fn isometry_rejects_different_spaces() {
        let a = space(&[&[0.0, 2.0], &[2.0, 0.0]]);
        let b = space(&[&[0.0, 5.0], &[5.0, 0.0]]);
        assert!(is_isometric(&a, &b, DEFAULT_TOLERANCE).is_none());

        // same diameters, different distance multisets {1,2,3} vs {2,3,3}
        let c = space(&[
            &[0.0, 1.0, 3.0],
            &[1.0, 0.0, 2.0],
            &[3.0, 2.0, 0.0],
        ]);
        let d = space(&[
            &[0.0, 2.0, 3.0],
            &[2.0, 0.0, 3.0],
            &[3.0, 3.0, 0.0],
        ]);
        assert!(is_isometric(&c, &d, DEFAULT_TOLERANCE).is_none());
    }
}
