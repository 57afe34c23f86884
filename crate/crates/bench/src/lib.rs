//! Shared fixtures for the criterion benches in `benches/`.

use gencol::graph::random::gnp;
use gencol::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A seeded G(n, p), so every run measures the same graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Roughly `avg_degree`-regular-ish sparse random graph.
pub fn sparse_graph(n: usize, avg_degree: f64, seed: u64) -> Graph {
    random_graph(n, avg_degree / (n.max(2) - 1) as f64, seed)
}
