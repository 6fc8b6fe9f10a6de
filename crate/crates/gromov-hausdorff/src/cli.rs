//! Command-line front end. One process, one command, JSON on stdout;
//! machine-readable error JSON on stderr with exit code 1 for validation or
//! parse failures and 2 for uncertified results under `--require-exact`.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::correspondence::CapExceeded;
use crate::geodesic::{make_geodesic, GeodesicError};
use crate::hausdorff::{hausdorff, one_sided};
use crate::io::{
    read_space, space_to_csv, space_to_json, write_file, CorrespondenceDoc,
    GHResultDoc, GeodesicManifestDoc, InputOptions, IoError, PointMetric,
    RealizationDoc, SpaceDoc,
};
use crate::metric::{DistanceSpace, Subset, SubsetError};
use crate::realization::{realize_from, RealizeError};
use crate::solver::{gh_exact, gh_oracle};

#[derive(Debug, Parser)]
#[command(name = "ghd", version, about = "Exact Gromov-Hausdorff distances between finite metric spaces")]
pub struct Cli {
    /// Validation tolerance for metric axioms.
    #[arg(long, global = true, default_value_t = crate::metric::DEFAULT_TOLERANCE)]
    pub tol: f64,

    /// Output format for emitted matrices (structured results are always JSON).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Treat CSV inputs as point-cloud coordinates instead of distance matrices.
    #[arg(long, global = true)]
    pub points: bool,

    /// Metric for point-cloud conversion.
    #[arg(long, global = true, value_enum, default_value_t = PointMetricArg::Euclidean)]
    pub point_metric: PointMetricArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PointMetricArg {
    Euclidean,
    Chebyshev,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a distance-matrix file and report the axioms check.
    Validate { file: PathBuf },
    /// Hausdorff distance between two index subsets of one space.
    Hausdorff {
        file: PathBuf,
        /// First subset, comma-separated point indices.
        #[arg(short = 'A', long = "A", value_delimiter = ',', required = true)]
        a: Vec<usize>,
        /// Second subset, comma-separated point indices.
        #[arg(short = 'B', long = "B", value_delimiter = ',', required = true)]
        b: Vec<usize>,
    },
    /// Exact Gromov-Hausdorff distance with an optimal witness.
    Gh {
        file_x: PathBuf,
        file_y: PathBuf,
        /// Node budget for the branch-and-bound search.
        #[arg(long)]
        budget: Option<u64>,
        /// Fail (exit 2) instead of reporting bounds when the budget runs out.
        #[arg(long)]
        require_exact: bool,
    },
    /// Realize both spaces inside a common metric space.
    Realize {
        file_x: PathBuf,
        file_y: PathBuf,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sample a geodesic between two spaces.
    Geodesic {
        file_x: PathBuf,
        file_y: PathBuf,
        /// Explicit parameter values in [0,1], comma-separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "steps")]
        ts: Option<Vec<f64>>,
        /// Number of equal parameter intervals (yields steps+1 samples).
        #[arg(long)]
        steps: Option<usize>,
        /// Output directory for sample files and manifest (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumeration-based GH distance for cross-checking the solver.
    Oracle { file_x: PathBuf, file_y: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Validation(String),
    Argument(String),
    Cap(CapExceeded),
    NotExact { lower: f64, upper: f64 },
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Validation(_) => "ValidationError",
            CliError::Argument(_) => "ArgumentError",
            CliError::Cap(_) => "CapExceeded",
            CliError::NotExact { .. } => "NotExact",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(m) | CliError::Validation(m) | CliError::Argument(m) => m.clone(),
            CliError::Cap(c) => c.to_string(),
            CliError::NotExact { lower, upper } => format!(
                "solver budget exhausted: GH distance bracketed in [{lower}, {upper}]"
            ),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::NotExact { .. } => 2,
            _ => 1,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Metric(m) => CliError::Validation(m.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<SubsetError> for CliError {
    fn from(e: SubsetError) -> Self {
        CliError::Argument(e.to_string())
    }
}

impl From<CapExceeded> for CliError {
    fn from(e: CapExceeded) -> Self {
        CliError::Cap(e)
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::NotExact { lower, upper } => CliError::NotExact { lower, upper },
        }
    }
}

impl From<GeodesicError> for CliError {
    fn from(e: GeodesicError) -> Self {
        match e {
            GeodesicError::NotExact { lower, upper } => CliError::NotExact { lower, upper },
            other => CliError::Argument(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct ErrorDoc<'a> {
    error: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ValidateDoc {
    valid: bool,
    n: usize,
    diameter: f64,
    labels: Vec<String>,
}

#[derive(Serialize)]
struct HausdorffDoc {
    hausdorff: f64,
    one_sided_ab: f64,
    one_sided_ba: f64,
}

#[derive(Serialize)]
struct GeodesicInlineDoc {
    gh: f64,
    witness: CorrespondenceDoc,
    ts: Vec<f64>,
    samples: Vec<SpaceDoc>,
}

/// Runs one command and returns the process exit status. Results go to
/// stdout, errors as JSON to stderr.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(output) => {
            println!("{output}");
            0
        }
        Err(e) => {
            let doc = ErrorDoc {
                error: e.kind(),
                message: e.message(),
            };
            eprintln!("{}", serde_json::to_string(&doc).expect("error serializes"));
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    if !(cli.tol > 0.0) {
        return Err(CliError::Argument(format!(
            "tolerance must be positive, got {}",
            cli.tol
        )));
    }
    let opts = InputOptions {
        points: cli.points,
        point_metric: match cli.point_metric {
            PointMetricArg::Euclidean => PointMetric::Euclidean,
            PointMetricArg::Chebyshev => PointMetric::Chebyshev,
        },
        tol: cli.tol,
    };
    let load = |path: &Path| read_space(path, &opts);

    match cli.command {
        Command::Validate { file } => {
            let space = load(&file)?;
            let doc = ValidateDoc {
                valid: true,
                n: space.len(),
                diameter: space.diameter(),
                labels: space.labels().to_vec(),
            };
            Ok(serde_json::to_string_pretty(&doc).expect("doc serializes"))
        }
        Command::Hausdorff { file, a, b } => {
            let space = load(&file)?;
            let a = Subset::new(space.len(), a)?;
            let b = Subset::new(space.len(), b)?;
            let doc = HausdorffDoc {
                hausdorff: hausdorff(&space, &a, &b),
                one_sided_ab: one_sided(&space, &a, &b),
                one_sided_ba: one_sided(&space, &b, &a),
            };
            Ok(serde_json::to_string_pretty(&doc).expect("doc serializes"))
        }
        Command::Gh {
            file_x,
            file_y,
            budget,
            require_exact,
        } => {
            if budget == Some(0) {
                return Err(CliError::Argument("budget must be positive".into()));
            }
            let x = load(&file_x)?;
            let y = load(&file_y)?;
            let result = gh_exact(&x, &y, budget);
            if require_exact && !result.exact {
                return Err(CliError::NotExact {
                    lower: result.lower_bound,
                    upper: result.upper_bound,
                });
            }
            let doc = GHResultDoc::from_result(&result);
            Ok(serde_json::to_string_pretty(&doc).expect("doc serializes"))
        }
        Command::Realize {
            file_x,
            file_y,
            output,
        } => {
            let x = load(&file_x)?;
            let y = load(&file_y)?;
            let realization = realize_from(&x, &y, gh_exact(&x, &y, None))?;
            let doc = RealizationDoc::from_realization(&realization);
            let text = serde_json::to_string_pretty(&doc).expect("doc serializes");
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(format!("{{\"written\": \"{}\"}}", path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Geodesic {
            file_x,
            file_y,
            ts,
            steps,
            output,
        } => {
            let ts = match (ts, steps) {
                (Some(ts), _) => ts,
                (None, Some(0)) => {
                    return Err(CliError::Argument("steps must be positive".into()))
                }
                (None, Some(k)) => (0..=k).map(|i| i as f64 / k as f64).collect(),
                (None, None) => vec![0.0, 0.25, 0.5, 0.75, 1.0],
            };
            if let Some(&bad) = ts.iter().find(|t| !(0.0..=1.0).contains(*t)) {
                return Err(CliError::Argument(format!(
                    "t values must lie in [0,1], got {bad}"
                )));
            }
            let x = load(&file_x)?;
            let y = load(&file_y)?;
            let curve = make_geodesic(&x, &y)?;
            let samples: Vec<_> = ts
                .iter()
                .map(|&t| curve.sample(t))
                .collect::<Result<_, _>>()?;
            match output {
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| {
                        CliError::Parse(format!("cannot create {}: {e}", dir.display()))
                    })?;
                    let ext = match cli.format {
                        Format::Json => "json",
                        Format::Csv => "csv",
                    };
                    let mut files = Vec::new();
                    for (i, sample) in samples.iter().enumerate() {
                        let name = format!("sample_{i:03}.{ext}");
                        let text = match cli.format {
                            Format::Json => space_to_json(sample),
                            Format::Csv => space_to_csv(sample),
                        };
                        write_file(&dir.join(&name), &text)?;
                        files.push(name);
                    }
                    let manifest = GeodesicManifestDoc {
                        gh: curve.gh(),
                        witness: CorrespondenceDoc::from_correspondence(curve.witness()),
                        ts,
                        files,
                    };
                    let text =
                        serde_json::to_string_pretty(&manifest).expect("doc serializes");
                    write_file(&dir.join("manifest.json"), &text)?;
                    Ok(text)
                }
                None => {
                    let doc = GeodesicInlineDoc {
                        gh: curve.gh(),
                        witness: CorrespondenceDoc::from_correspondence(curve.witness()),
                        ts,
                        samples: samples.iter().map(SpaceDoc::from_space).collect(),
                    };
                    Ok(serde_json::to_string_pretty(&doc).expect("doc serializes"))
                }
            }
        }
        Command::Oracle { file_x, file_y } => {
            let x = load(&file_x)?;
            let y = load(&file_y)?;
            let result = gh_oracle(&x, &y)?;
            let doc = GHResultDoc::from_result(&result);
            Ok(serde_json::to_string_pretty(&doc).expect("doc serializes"))
        }
    }
}
