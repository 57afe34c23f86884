//! Seeded random graph generators.

use rand::Rng;

use super::{BipartiteGraph, Graph};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_merged(n, edges)
}

/// Random bipartite graph with sides `0..a` and `a..a+b`, each cross pair an
/// edge with probability `p`.
pub fn bipartite_gnp<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let side = (0..a + b).map(|v| if v < a { 1 } else { 2 }).collect();
    BipartiteGraph::new(Graph::from_edges_merged(a + b, edges), side)
        .expect("cross edges only")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(7));
        let b = gnp(20, 0.3, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        assert_eq!(gnp(6, 1.0, &mut ChaCha8Rng::seed_from_u64(1)).m(), 15);
        let bg = bipartite_gnp(3, 4, 1.0, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(bg.graph().m(), 12);
    }
}
