//! Reduction from balanced complete bipartite subgraph to `wcol_3`.
//!
//! A bipartite graph on `n` vertices contains `K_{k,k}` across its parts iff
//! the weak 3-colouring number of its complement is at most `n - k`. In the
//! complement both parts are cliques, and `wcol_r` no longer changes for
//! `r >= 3`.

use serde::Serialize;

use crate::error::{input, Result};
use crate::exact::{biclique_bruteforce, wcol_exact, ExactConfig};
use crate::graph::{complement, BipartiteGraph, Graph, Vertex};
use crate::order::LinearOrder;

/// The reduced instance `(complement, n - k)`.
pub fn bcbs_to_wcol(bg: &BipartiteGraph, k: usize) -> Result<(Graph, usize)> {
    let n = bg.graph().n();
    let smaller = bg.part(1).len().min(bg.part(2).len());
    if k == 0 || k > smaller {
        return input(format!("k = {k} outside 1..={smaller}"));
    }
    Ok((complement(bg.graph()), n - k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub k: usize,
    pub threshold: usize,
    pub biclique: bool,
    pub wcol3: usize,
    pub wcol4: usize,
}

impl ReductionReport {
    /// `biclique <=> wcol_3 <= n - k`.
    pub fn equivalent(&self) -> bool {
        self.biclique == (self.wcol3 <= self.threshold)
    }

    pub fn stable(&self) -> bool {
        self.wcol3 == self.wcol4
    }

    pub fn holds(&self) -> bool {
        self.equivalent() && self.stable()
    }
}

/// Solves both sides exactly and reports them.
pub fn verify_reduction(bg: &BipartiteGraph, k: usize, cfg: &ExactConfig) -> Result<ReductionReport> {
    let (co, threshold) = bcbs_to_wcol(bg, k)?;
    Ok(ReductionReport {
        n: co.n(),
        k,
        threshold,
        biclique: biclique_bruteforce(bg, k)?,
        wcol3: wcol_exact(&co, 3, cfg)?.value,
        wcol4: wcol_exact(&co, 4, cfg)?.value,
    })
}

/// The order from the equivalence proof: all other vertices first, then
/// `w1`, then `w2`, each block by id. Under it every vertex of the complement
/// weakly 3-reaches at most `n - k` vertices.
pub fn witness_order(bg: &BipartiteGraph, w1: &[Vertex], w2: &[Vertex]) -> Result<LinearOrder> {
    let g = bg.graph();
    let k = w1.len();
    if k == 0 || w2.len() != k {
        return input("biclique sides must be non-empty and of equal size");
    }
    let mut place = vec![0u8; g.n()];
    for (block, set) in [(1, w1), (2, w2)] {
        for &v in set {
            g.check_vertex(v)?;
            if place[v] != 0 {
                return input(format!("vertex {v} listed twice"));
            }
            place[v] = block;
        }
    }
    let side = |set: &[Vertex]| bg.side(set[0]);
    if w1.iter().any(|&v| bg.side(v) != side(w1)) || w2.iter().any(|&v| bg.side(v) != side(w2)) || side(w1) == side(w2) {
        return input("each biclique side must lie within one part, on opposite parts");
    }
    if let Some((u, v)) = w1.iter().flat_map(|&u| w2.iter().map(move |&v| (u, v))).find(|&(u, v)| !g.has_edge(u, v)) {
        return input(format!("{u} and {v} are not adjacent; not a biclique"));
    }
    let mut seq: Vec<Vertex> = g.vertices().collect();
    seq.sort_by_key(|&v| (place[v], v));
    LinearOrder::from_sequence(seq)
}
