//! Seeded random DAG generation for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::RestrictionGraph;

/// Default seed for reproducible tooling.
pub const DEFAULT_SEED: u64 = 1;

/// Edge densities the sampled test universes draw from.
pub const EDGE_DENSITIES: [f64; 3] = [0.1, 0.3, 0.6];

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random DAG on `n` vertices: a uniformly random permutation fixes an
/// implicit topological order, and each forward pair becomes an edge with
/// probability `p`. Acyclic by construction.
pub fn random_dag<R: Rng>(n: usize, p: f64, rng: &mut R) -> RestrictionGraph {
    let mut order: Vec<u32> = (1..=n as u32).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((order[i], order[j]));
            }
        }
    }
    RestrictionGraph::new(n, edges).expect("sampled graphs are valid")
}
