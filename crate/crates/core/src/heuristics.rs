//! Constructive orders: greedy admissibility order and degeneracy order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;
use crate::packing::{pack_paths, Role};

fn b_roles(n: usize, in_s: &[bool]) -> Vec<Role> {
    (0..n)
        .map(|u| if in_s[u] { Role::Target } else { Role::Internal })
        .collect()
}

/// `b_r(S, v)`: the number of paths of length at most `r` from `v` to `S`
/// with inner vertices outside `S`, pairwise meeting only at `v`. Counts the
/// trivial path.
pub fn b_r(g: &Graph, s: &[Vertex], v: Vertex, r: usize) -> Result<usize> {
    g.check_vertex(v)?;
    let mut in_s = vec![false; g.n()];
    for &u in s {
        g.check_vertex(u)?;
        in_s[u] = true;
    }
    if !in_s[v] {
        return input(format!("vertex {v} is not in S"));
    }
    Ok(1 + pack_paths(g, v, &b_roles(g.n(), &in_s), r).value)
}

/// Greedy order built from the largest position down: with the vertices
/// above position `i` fixed, the vertex placed at `i` minimises `b_r(S_i, v)`
/// where `S_i` is the set still unplaced (ties by smallest id).
///
/// Returns the order and the largest `b_r` value selected, which equals
/// `eval_adm(g, order, r)`.
pub fn greedy_adm(g: &Graph, r: usize) -> Result<(LinearOrder, usize)> {
    if r == 0 {
        return input("greedy admissibility order needs r >= 1");
    }
    let n = g.n();
    let mut in_s = vec![true; n];
    let mut seq = vec![0; n];
    let mut certificate = 0;
    for i in (0..n).rev() {
        let roles = b_roles(n, &in_s);
        let (b, v) = (0..n)
            .into_par_iter()
            .filter(|&v| in_s[v])
            .map(|v| (1 + pack_paths(g, v, &roles, r).value, v))
            .min()
            .expect("unplaced vertex remains");
        seq[i] = v;
        in_s[v] = false;
        certificate = certificate.max(b);
    }
    Ok((LinearOrder::from_sequence(seq)?, certificate))
}

pub fn greedy_adm_order(g: &Graph, r: usize) -> Result<LinearOrder> {
    greedy_adm(g, r).map(|(o, _)| o)
}

/// Min-degree peeling. Returns the removal sequence and the largest degree
/// seen at removal time (the degeneracy).
pub(crate) fn peel(g: &Graph) -> (Vec<Vertex>, usize) {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut gone = vec![false; g.n()];
    let mut removal = Vec::with_capacity(g.n());
    let mut worst = 0;
    while let Some((d, v)) = queue.pop_first() {
        worst = worst.max(d);
        gone[v] = true;
        removal.push(v);
        for &w in g.neighbours(v) {
            if !gone[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    (removal, worst)
}

/// Degeneracy order: the first vertex peeled gets the largest position, so
/// each vertex sees at most `degeneracy` smaller neighbours and
/// `eval_wcol(g, order, 1) = degeneracy + 1`.
pub fn degeneracy_order(g: &Graph) -> LinearOrder {
    let (mut removal, _) = peel(g);
    removal.reverse();
    LinearOrder::from_sequence(removal).expect("peeling visits every vertex once")
}

/// Names accepted by [`heuristic_order`].
pub const HEURISTICS: [&str; 3] = ["identity", "degeneracy", "greedy-adm"];

/// Looks up a constructive order by name; `r` only matters for `greedy-adm`.
pub fn heuristic_order(g: &Graph, name: &str, r: usize) -> Result<LinearOrder> {
    match name {
        "identity" => Ok(LinearOrder::identity(g.n())),
        "degeneracy" => Ok(degeneracy_order(g)),
        "greedy-adm" => greedy_adm_order(g, r.max(1)),
        _ => input(format!("unknown heuristic '{name}', expected one of {}", HEURISTICS.join(", "))),
    }
}
