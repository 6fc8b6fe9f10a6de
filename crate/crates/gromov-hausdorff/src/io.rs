//! File formats and canonical JSON documents.
//!
//! Distance matrices are read from JSON (`{"labels": [...], "dist": [[...]]}`)
//! or headerless CSV. Point clouds are CSV rows of coordinates converted to a
//! distance matrix under the Euclidean or Chebyshev metric. All structured
//! output is JSON with a fixed field order and sorted pairs, so repeated runs
//! are byte-identical.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::correspondence::Correspondence;
use crate::metric::{DistanceSpace, FiniteMetricSpace, MetricError};
use crate::realization::Realization;
use crate::solver::GHResult;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid number {text:?} at row {row}, column {col}")]
    BadNumber {
        text: String,
        row: usize,
        col: usize,
    },
    #[error("point cloud rows have inconsistent dimensions: row {row} has {len}, expected {dim}")]
    RaggedPoints { row: usize, len: usize, dim: usize },
    #[error("file is empty: {0}")]
    EmptyFile(String),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointMetric {
    Euclidean,
    Chebyshev,
}

/// How to interpret input files.
#[derive(Debug, Clone, Copy)]
pub struct InputOptions {
    /// Treat CSV input as point-cloud coordinates instead of a matrix.
    pub points: bool,
    pub point_metric: PointMetric,
    /// Validation tolerance for metric axioms.
    pub tol: f64,
}

impl Default for InputOptions {
    fn default() -> Self {
        Self {
            points: false,
            point_metric: PointMetric::Euclidean,
            tol: crate::metric::DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub dist: Vec<Vec<f64>>,
}

impl SpaceDoc {
    pub fn from_space<S: DistanceSpace>(space: &S) -> Self {
        Self {
            labels: Some(space.labels().to_vec()),
            dist: space.matrix(),
        }
    }

    pub fn into_space(self, tol: f64) -> Result<FiniteMetricSpace, MetricError> {
        FiniteMetricSpace::with_tolerance(self.dist, self.labels, tol)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrespondenceDoc {
    pub pairs: Vec<(usize, usize)>,
}

impl CorrespondenceDoc {
    pub fn from_correspondence(c: &Correspondence) -> Self {
        Self {
            pairs: c.pairs().to_vec(), // already sorted
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GHResultDoc {
    pub value: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub exact: bool,
    pub nodes_explored: u64,
    pub witness: CorrespondenceDoc,
}

impl GHResultDoc {
    pub fn from_result(r: &GHResult) -> Self {
        Self {
            value: r.value,
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            exact: r.exact,
            nodes_explored: r.nodes_explored,
            witness: CorrespondenceDoc::from_correspondence(&r.witness),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealizationDoc {
    pub achieved: f64,
    pub space: SpaceDoc,
    pub embed_x: Vec<usize>,
    pub embed_y: Vec<usize>,
    pub witness: CorrespondenceDoc,
}

impl RealizationDoc {
    pub fn from_realization(r: &Realization) -> Self {
        Self {
            achieved: r.achieved,
            space: SpaceDoc::from_space(&r.z),
            embed_x: r.embed_x.clone(),
            embed_y: r.embed_y.clone(),
            witness: CorrespondenceDoc::from_correspondence(&r.witness),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeodesicManifestDoc {
    pub gh: f64,
    pub witness: CorrespondenceDoc,
    pub ts: Vec<f64>,
    /// Sample file names, parallel to `ts`; empty when samples are inlined.
    pub files: Vec<String>,
}

pub fn read_space(path: &Path, opts: &InputOptions) -> Result<FiniteMetricSpace, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    if text.trim().is_empty() {
        return Err(IoError::EmptyFile(path.display().to_string()));
    }
    let is_json = path
        .extension()
        .map(|e| e.eq_ignore_ascii_case("json"))
        .unwrap_or(false);
    if is_json {
        let doc: SpaceDoc = serde_json::from_str(&text)?;
        Ok(doc.into_space(opts.tol)?)
    } else if opts.points {
        let points = parse_numeric_csv(&text)?;
        let matrix = points_to_matrix(&points, opts.point_metric)?;
        Ok(FiniteMetricSpace::with_tolerance(matrix, None, opts.tol)?)
    } else {
        let matrix = parse_numeric_csv(&text)?;
        Ok(FiniteMetricSpace::with_tolerance(matrix, None, opts.tol)?)
    }
}

fn parse_numeric_csv(text: &str) -> Result<Vec<Vec<f64>>, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record?;
        let mut out = Vec::with_capacity(record.len());
        for (col, field) in record.iter().enumerate() {
            let v: f64 = field.parse().map_err(|_| IoError::BadNumber {
                text: field.to_string(),
                row,
                col,
            })?;
            out.push(v);
        }
        rows.push(out);
    }
    Ok(rows)
}

/// Pairwise distances of a coordinate list.
pub fn points_to_matrix(
    points: &[Vec<f64>],
    metric: PointMetric,
) -> Result<Vec<Vec<f64>>, IoError> {
    let n = points.len();
    let dim = points.first().map(|p| p.len()).unwrap_or(0);
    for (row, p) in points.iter().enumerate() {
        if p.len() != dim {
            return Err(IoError::RaggedPoints {
                row,
                len: p.len(),
                dim,
            });
        }
    }
    let d = |a: &[f64], b: &[f64]| match metric {
        PointMetric::Euclidean => a
            .iter()
            .zip(b)
            .map(|(u, v)| (u - v) * (u - v))
            .sum::<f64>()
            .sqrt(),
        PointMetric::Chebyshev => a
            .iter()
            .zip(b)
            .map(|(u, v)| (u - v).abs())
            .fold(0.0f64, f64::max),
    };
    Ok((0..n)
        .map(|i| (0..n).map(|j| d(&points[i], &points[j])).collect())
        .collect())
}

pub fn space_to_json<S: DistanceSpace>(space: &S) -> String {
    serde_json::to_string_pretty(&SpaceDoc::from_space(space)).expect("space serializes")
}

pub fn space_to_csv<S: DistanceSpace>(space: &S) -> String {
    let mut out = String::new();
    for row in space.matrix() {
        let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_identical() {
        let s = FiniteMetricSpace::new(
            vec![
                vec![0.0, 1.25, 3.0],
                vec![1.25, 0.0, 2.125],
                vec![3.0, 2.125, 0.0],
            ],
            Some(vec!["a".into(), "b".into(), "c".into()]),
        )
        .unwrap();
        let text = space_to_json(&s);
        let doc: SpaceDoc = serde_json::from_str(&text).unwrap();
        let back = doc.into_space(1e-9).unwrap();
        assert_eq!(back, s);
        assert_eq!(space_to_json(&back), text);
    }

    #[test]
    fn csv_matrix_parses() {
        let matrix = parse_numeric_csv("0,1\n1,0\n").unwrap();
        assert_eq!(matrix, vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!(matches!(
            parse_numeric_csv("0,x\n"),
            Err(IoError::BadNumber { .. })
        ));
    }

    #[test]
    fn point_cloud_conversion() {
        let points = vec![vec![0.0, 0.0], vec![3.0, 4.0]];
        let euc = points_to_matrix(&points, PointMetric::Euclidean).unwrap();
        assert_eq!(euc[0][1], 5.0);
        let che = points_to_matrix(&points, PointMetric::Chebyshev).unwrap();
        assert_eq!(che[0][1], 4.0);
        assert!(matches!(
            points_to_matrix(
                &[vec![0.0], vec![1.0, 2.0]],
                PointMetric::Euclidean
            ),
            Err(IoError::RaggedPoints { .. })
        ));
    }
}
