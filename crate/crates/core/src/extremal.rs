//! The family `G(k, r)` whose weak colouring numbers meet `C(r' + k, k)` for
//! every `r' <= r`, built together with its tree decomposition.
//!
//! With `c = C(r + k, k)` fixed once:
//! - `T(k', 1)`: complete `c`-ary tree with `k' + 1` levels, each bag the node
//!   together with all its ancestors;
//! - `T(1, r')`: complete `c`-ary tree with `r' + 1` levels, each bag a node
//!   and its parent;
//! - `T(k', r')`: `T(k', r' - 1)` with `c` copies of `T(k' - 1, r')` hung
//!   below every leaf `z`, each copied bag extended by `z`.
//!
//! Every node introduces exactly one vertex, so nodes and vertices share ids
//! (breadth-first numbering). The graph joins two vertices iff some bag holds
//! both.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::td::{binomial, TreeDecomposition};

/// Vertex cap applied by [`gen_gkr`].
pub const DEFAULT_CAP: u128 = 100_000;

pub struct ExtremalInstance {
    pub k: usize,
    pub r: usize,
    pub c: usize,
    pub graph: Graph,
    /// Not smooth; see [`crate::td::make_smooth`].
    pub td: TreeDecomposition,
    /// `parent[t]` in the construction tree (root 0 has none).
    pub parent: Vec<Option<usize>>,
}

impl ExtremalInstance {
    /// The bijection from tree nodes to vertices (identity by construction).
    pub fn f(&self, node: usize) -> Vertex {
        node
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct SizeEstimate {
    pub k: usize,
    pub r: usize,
    pub c: u128,
    pub vertices: u128,
}

fn levels(c: u128, depth: usize) -> Option<(u128, u128)> {
    // (total nodes, leaves) of a complete c-ary tree with `depth + 1` levels
    let mut total = 0u128;
    let mut layer = 1u128;
    for i in 0..=depth {
        total = total.checked_add(layer)?;
        if i < depth {
            layer = layer.checked_mul(c)?;
        }
    }
    Some((total, layer))
}

fn count(k: usize, r: usize, c: u128) -> Option<(u128, u128)> {
    match (k, r) {
        (_, 1) => levels(c, k),
        (1, _) => levels(c, r),
        _ => {
            let (base, leaves) = count(k, r - 1, c)?;
            let (sub, sub_leaves) = count(k - 1, r, c)?;
            let copies = leaves.checked_mul(c)?;
            Some((
                base.checked_add(copies.checked_mul(sub)?)?,
                copies.checked_mul(sub_leaves)?,
            ))
        }
    }
}

/// Exact vertex count of `G(k, r)` without building it (`None` on overflow).
pub fn size_estimate(k: usize, r: usize) -> Result<SizeEstimate> {
    if k == 0 || r == 0 {
        return input("G(k, r) needs k, r >= 1");
    }
    let c = binomial((r + k) as u64, k as u64);
    size_with_branching(k, r, c)
}

fn size_with_branching(k: usize, r: usize, c: u128) -> Result<SizeEstimate> {
    let vertices = count(k, r, c).map(|(n, _)| n).unwrap_or(u128::MAX);
    Ok(SizeEstimate { k, r, c, vertices })
}

/// Construction tree: parent links and bags, node `i` introducing vertex `i`.
struct Tree {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<usize>>,
}

impl Tree {
    fn complete(c: usize, depth: usize, ancestors: bool) -> Tree {
        let mut t = Tree { parent: vec![None], bags: vec![vec![0]] };
        let mut layer = vec![0];
        for _ in 0..depth {
            let mut next = Vec::new();
            for &p in &layer {
                for _ in 0..c {
                    let id = t.parent.len();
                    let mut bag = if ancestors { t.bags[p].clone() } else { vec![p] };
                    bag.push(id);
                    t.parent.push(Some(p));
                    t.bags.push(bag);
                    next.push(id);
                }
            }
            layer = next;
        }
        t
    }

    fn leaves(&self) -> Vec<usize> {
        let mut has_child = vec![false; self.parent.len()];
        self.parent.iter().flatten().for_each(|&p| has_child[p] = true);
        (0..self.parent.len()).filter(|&t| !has_child[t]).collect()
    }

    fn build(k: usize, r: usize, c: usize) -> Tree {
        match (k, r) {
            (_, 1) => Tree::complete(c, k, true),
            (1, _) => Tree::complete(c, r, false),
            _ => {
                let mut t = Tree::build(k, r - 1, c);
                let sub = Tree::build(k - 1, r, c);
                for z in t.leaves() {
                    for _ in 0..c {
                        let off = t.parent.len();
                        for (i, bag) in sub.bags.iter().enumerate() {
                            t.parent.push(Some(sub.parent[i].map_or(z, |p| p + off)));
                            let mut b: Vec<usize> = bag.iter().map(|v| v + off).collect();
                            b.push(z);
                            t.bags.push(b);
                        }
                    }
                }
                t
            }
        }
    }

    /// Renumbers nodes breadth-first (children in creation order).
    fn bfs_renumber(self) -> Tree {
        let n = self.parent.len();
        let mut children = vec![Vec::new(); n];
        for (t, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(t);
            }
        }
        let mut new_id = vec![0; n];
        let mut seq = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0]);
        while let Some(t) = queue.pop_front() {
            new_id[t] = seq.len();
            seq.push(t);
            queue.extend(children[t].iter().copied());
        }
        Tree {
            parent: seq.iter().map(|&t| self.parent[t].map(|p| new_id[p])).collect(),
            bags: seq
                .iter()
                .map(|&t| {
                    let mut b: Vec<usize> = self.bags[t].iter().map(|&v| new_id[v]).collect();
                    b.sort_unstable();
                    b
                })
                .collect(),
        }
    }
}

/// Builds `G(k, r)` with the default vertex cap.
pub fn gen_gkr(k: usize, r: usize) -> Result<ExtremalInstance> {
    gen_gkr_capped(k, r, DEFAULT_CAP)
}

pub fn gen_gkr_capped(k: usize, r: usize, cap: u128) -> Result<ExtremalInstance> {
    let est = size_estimate(k, r)?;
    if est.vertices > cap {
        return Err(Error::TooLarge {
            what: "gen_gkr",
            estimate: est.vertices,
            cap,
        });
    }
    let c = est.c as usize;
    let tree = Tree::build(k, r, c).bfs_renumber();
    let n = tree.parent.len();
    debug_assert_eq!(n as u128, est.vertices);
    let mut edges = Vec::new();
    for bag in &tree.bags {
        for (i, &u) in bag.iter().enumerate() {
            edges.extend(bag[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    let graph = Graph::from_edges_merged(n, edges);
    let tree_edges = tree.parent.iter().enumerate().filter_map(|(t, p)| p.map(|p| (p, t))).collect();
    let td = TreeDecomposition::new(tree.bags, tree_edges);
    Ok(ExtremalInstance {
        k,
        r,
        c,
        graph,
        td,
        parent: tree.parent,
    })
}
