//! One-sided and symmetric Hausdorff distances between subsets of a common
//! metric space.
//!
//! Run with: cargo run --example hausdorff_subsets

use gromov_hausdorff::hausdorff::{hausdorff, one_sided, point_to_set};
use gromov_hausdorff::metric::{FiniteMetricSpace, Subset};

fn main() {
    // Points 0, 1, 3 on a line.
    let space = FiniteMetricSpace::new(
        vec![
            vec![0.0, 1.0, 3.0],
            vec![1.0, 0.0, 2.0],
            vec![3.0, 2.0, 0.0],
        ],
        None,
    )
    .unwrap();

    let a = Subset::new(3, [0]).unwrap();
    let b = Subset::new(3, [1, 2]).unwrap();

    println!("d(point 0, {{1, 2}}) = {}", point_to_set(&space, 0, &b));

    // The one-sided distances differ: every point of A is within 1 of B,
    // but the far point of B is at distance 3 from A.
    println!("one_sided(A -> B) = {}", one_sided(&space, &a, &b));
    println!("one_sided(B -> A) = {}", one_sided(&space, &b, &a));
    println!("hausdorff(A, B)   = {}", hausdorff(&space, &a, &b));

    // Containment makes one direction collapse to zero.
    let full = Subset::full(3);
    println!(
        "\none_sided(A -> full) = {} (A is contained in the whole space)",
        one_sided(&space, &a, &full)
    );
    println!("hausdorff(A, full)   = {}", hausdorff(&space, &a, &full));
}
