use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;

use super::TreeDecomposition;
use crate::error::{input, Result};
use crate::exact::{treewidth_order, ExactConfig};
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;

/// Decomposition read off an elimination order: node `v` holds `v` and its
/// later fill-neighbours and hangs below the earliest-eliminated of those.
/// Roots of separate components are chained together.
pub fn from_elimination_order(g: &Graph, elimination: &[Vertex]) -> Result<TreeDecomposition> {
    let order = LinearOrder::from_sequence(elimination.to_vec())?;
    order.check_len(g.n())?;
    let mut adj: Vec<BTreeSet<Vertex>> = g.vertices().map(|v| g.neighbours(v).iter().copied().collect()).collect();
    let mut bags = vec![Vec::new(); g.n()];
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for &v in elimination {
        let later: Vec<Vertex> = adj[v].iter().copied().filter(|&u| order.less(v, u)).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        match later.iter().min_by_key(|&&u| order.pos(u)) {
            Some(&p) => edges.push((p, v)),
            None => roots.push(v),
        }
        bags[v] = later;
        bags[v].push(v);
    }
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    Ok(TreeDecomposition::new(bags, edges))
}

/// Minimum-width decomposition from an optimal elimination order.
pub fn decompose_exact(g: &Graph, cfg: &ExactConfig) -> Result<TreeDecomposition> {
    let (_, order) = treewidth_order(g, cfg)?;
    from_elimination_order(g, &order)
}

/// Random partial `k`-tree on `n` vertices with its natural smooth
/// decomposition. Starts from a `(k+1)`-clique; each new vertex joins a random
/// `k`-subset of a random existing bag. Every edge of the `k`-tree is then
/// kept with probability `p`.
pub fn random_partial_ktree<R: Rng + ?Sized>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<(Graph, TreeDecomposition)> {
    if k == 0 || n < k + 1 {
        return input(format!("partial {k}-tree needs k >= 1 and at least k + 1 vertices, got n = {n}"));
    }
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability {p} outside [0, 1]"));
    }
    let mut bags: Vec<Vec<Vertex>> = vec![(0..=k).collect()];
    let mut tree = Vec::new();
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    for v in k + 1..n {
        let parent = rng.random_range(0..bags.len());
        let mut bag = bags[parent].clone();
        let dropped = *bag.choose(rng).expect("bags have k + 1 vertices");
        bag.retain(|&u| u != dropped);
        edges.extend(bag.iter().map(|&u| (u, v)));
        bag.push(v);
        tree.push((parent, bags.len()));
        bags.push(bag);
    }
    edges.retain(|_| rng.random_bool(p));
    let g = Graph::from_edges(n, edges)?;
    Ok((g, TreeDecomposition::new(bags, tree)))
}
