//! Shared generators for the integration suites: random spaces come from
//! random Euclidean point sets, so every instance is a genuine metric space.
#![allow(dead_code)] // each test binary uses its own slice of these helpers

use gromov_hausdorff::correspondence::{Correspondence, Relation};
use gromov_hausdorff::metric::{FiniteMetricSpace, Subset};
use rand::Rng;

pub fn random_space<R: Rng>(rng: &mut R, n: usize) -> FiniteMetricSpace {
    loop {
        let points: Vec<[f64; 3]> = (0..n)
            .map(|_| {
                [
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ]
            })
            .collect();
        let matrix: Vec<Vec<f64>> = points
            .iter()
            .map(|p| points.iter().map(|q| euclidean(p, q)).collect())
            .collect();
        if let Ok(space) = FiniteMetricSpace::new(matrix, None) {
            return space;
        }
    }
}

fn euclidean(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v) * (u - v))
        .sum::<f64>()
        .sqrt()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Subset {
    loop {
        let indices: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if let Ok(s) = Subset::new(n, indices) {
            return s;
        }
    }
}

pub fn random_relation<R: Rng>(rng: &mut R, n: usize, m: usize) -> Relation {
    loop {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        if let Ok(r) = Relation::new(n, m, pairs) {
            return r;
        }
    }
}

pub fn random_correspondence<R: Rng>(rng: &mut R, n: usize, m: usize) -> Correspondence {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        pairs.push((i, rng.gen_range(0..m)));
    }
    for j in 0..m {
        pairs.push((rng.gen_range(0..n), j));
    }
    for i in 0..n {
        for j in 0..m {
            if rng.gen_bool(0.15) {
                pairs.push((i, j));
            }
        }
    }
    Correspondence::new(n, m, pairs).expect("construction covers both sides")
}
