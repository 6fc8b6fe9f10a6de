//! Building validated metric spaces, catching bad matrices, and collapsing
//! pseudometrics to their metric quotients.
//!
//! Run with: cargo run --example validate_metrics

use gromov_hausdorff::metric::{
    is_isometric, DistanceSpace, FiniteMetricSpace, FinitePseudoMetricSpace, Subset,
};

fn main() {
    // Four points on a line: 0, 1, 3, 7.
    let line = FiniteMetricSpace::new(
        vec![
            vec![0.0, 1.0, 3.0, 7.0],
            vec![1.0, 0.0, 2.0, 6.0],
            vec![3.0, 2.0, 0.0, 4.0],
            vec![7.0, 6.0, 4.0, 0.0],
        ],
        Some(vec!["a".into(), "b".into(), "c".into(), "d".into()]),
    )
    .expect("a valid metric");
    println!("line: n = {}, diameter = {}", line.len(), line.diameter());
    for i in 0..line.len() {
        println!("  ecc({}) = {}", line.labels()[i], line.eccentricity(i));
    }

    // Validation rejects matrices that only look like metrics.
    let broken = FiniteMetricSpace::new(
        vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ],
        None,
    );
    println!("\ntriangle violation: {}", broken.unwrap_err());

    let asymmetric =
        FiniteMetricSpace::new(vec![vec![0.0, 1.0], vec![2.0, 0.0]], None);
    println!("asymmetry: {}", asymmetric.unwrap_err());

    // Subspaces restrict the matrix; permutations relabel the points.
    let subset = Subset::new(line.len(), [0, 2, 3]).unwrap();
    let sub = line.subspace(&subset);
    println!("\nsubspace on {{a, c, d}}: diameter = {}", sub.diameter());
    let shuffled = line.permuted(&[3, 1, 0, 2]);
    println!(
        "a permuted copy is isometric: {:?}",
        is_isometric(&line, &shuffled, 0.0)
    );

    // A pseudometric may hold distinct points at distance zero; the quotient
    // merges them and reports where each original point went.
    let pseudo = FinitePseudoMetricSpace::new(
        vec![
            vec![0.0, 0.0, 2.0],
            vec![0.0, 0.0, 2.0],
            vec![2.0, 2.0, 0.0],
        ],
        Some(vec!["p".into(), "p'".into(), "q".into()]),
    )
    .unwrap();
    let (quotient, projection) = pseudo.quotient();
    println!(
        "\npseudometric on 3 points quotients to {} points, projection {:?}",
        quotient.len(),
        projection
    );
}
