//! Seeded Erdős–Rényi sampling on ChaCha8.
//!
//! `random_graph` seeds with `seed_from_u64(seed)` and visits the pairs
//! `(i, j)`, `i < j`, in lexicographic order, keeping each with one
//! `gen_bool(p)` draw. Sample `i` of a batch uses the same seed on stream
//! `i`, first drawing the order uniformly from the range.

use super::HarnessError;
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_p(p: f64) -> Result<(), HarnessError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(HarnessError::InvalidProbability(p))
    }
}

fn fill(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are distinct and in range")
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, HarnessError> {
    check_p(p)?;
    Ok(fill(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// The `index`-th graph of a seeded batch with orders in `n_min..=n_max`.
pub fn sample_graph(seed: u64, index: u64, n_min: usize, n_max: usize, p: f64) -> Result<Graph, HarnessError> {
    check_p(p)?;
    if n_min > n_max {
        return Err(HarnessError::EmptyRange { lo: n_min, hi: n_max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(n_min..=n_max);
    Ok(fill(n, p, &mut rng))
}
