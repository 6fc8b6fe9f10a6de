//! Cross-checking the branch-and-bound solver against brute-force
//! enumeration of every correspondence on small instances.
//!
//! Run with: cargo run --example oracle_crosscheck

use gromov_hausdorff::correspondence::enumerate_correspondences;
use gromov_hausdorff::metric::FiniteMetricSpace;
use gromov_hausdorff::solver::{gh_exact, gh_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_space(rng: &mut ChaCha8Rng, n: usize) -> FiniteMetricSpace {
    loop {
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let matrix: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| {
                pts.iter()
                    .map(|q| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt())
                    .collect()
            })
            .collect();
        if let Ok(space) = FiniteMetricSpace::new(matrix, None) {
            return space;
        }
    }
}

fn main() {
    // How many correspondences are there between small spaces? Each is a
    // subset of the n x m grid whose projections cover both sides.
    for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
        let count = enumerate_correspondences(n, m).unwrap().count();
        println!("{} x {} grid: {} correspondences", n, m, count);
    }
    // 5 x 5 exceeds the enumeration cap and is refused up front.
    if let Err(err) = enumerate_correspondences(5, 5) {
        println!("5 x 5: {err}");
    }

    // The oracle minimizes distortion by trying all of them; the solver must
    // agree on value and (by the shared tie-break) on the witness too.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for trial in 0..50 {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let x = random_space(&mut rng, n);
        let y = random_space(&mut rng, m);
        let fast = gh_exact(&x, &y, None);
        let slow = gh_oracle(&x, &y).unwrap();
        assert!(fast.exact);
        assert_eq!(fast.value, slow.value, "trial {trial}");
        assert_eq!(fast.witness.pairs(), slow.witness.pairs(), "trial {trial}");
        worst = worst.max((fast.value - slow.value).abs());
    }
    println!("\n50 random instances: solver and oracle agree exactly (max gap {worst})");
}
