//! Walking a shortest curve between two metric spaces: sample intermediate
//! spaces and verify that distances along the curve scale linearly.
//!
//! Run with: cargo run --example geodesic_interpolation

use gromov_hausdorff::geodesic::make_geodesic;
use gromov_hausdorff::metric::{DistanceSpace, FiniteMetricSpace};

fn space(rows: &[&[f64]]) -> FiniteMetricSpace {
    FiniteMetricSpace::new(rows.iter().map(|r| r.to_vec()).collect(), None).unwrap()
}

fn main() {
    // A 3-point space flattening onto a 2-point one.
    let x = space(&[
        &[0.0, 1.0, 2.2],
        &[1.0, 0.0, 1.7],
        &[2.2, 1.7, 0.0],
    ]);
    let y = space(&[&[0.0, 3.0], &[3.0, 0.0]]);

    let curve = make_geodesic(&x, &y).unwrap();
    println!(
        "gh = {}, curve lives on {} matched pairs: {:?}",
        curve.gh(),
        curve.witness().len(),
        curve.witness().pairs()
    );

    // Each sample is a genuine metric space; the endpoints reproduce X and Y
    // after collapsing zero distances.
    for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let s = curve.sample(t).unwrap();
        let dists: Vec<f64> = (0..s.len())
            .flat_map(|i| ((i + 1)..s.len()).map(move |j| (i, j)))
            .map(|(i, j)| s.dist(i, j))
            .collect();
        println!("  t = {t:<4}: {} points, distances {dists:?}", s.len());
    }

    // The linearity certificate: for every sampled pair (s, t), the exact
    // distance between the samples equals |s - t| * gh.
    let report = curve.check(&[0.0, 0.25, 0.5, 0.75, 1.0]).unwrap();
    println!(
        "\nchecked {} sample pairs, max deviation from linearity = {:e}",
        report.checks.len(),
        report.max_deviation
    );
    for c in report.checks.iter().take(4) {
        println!(
            "  gh(R_{}, R_{}) = {} (expected {})",
            c.s, c.t, c.gh, c.expected
        );
    }
}
