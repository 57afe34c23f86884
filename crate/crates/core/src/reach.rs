//! Weak and strong `r`-reachability, `r`-admissibility and the layered reach
//! statistics of a fixed linear order.
//!
//! `u` is weakly `r`-reachable from `v` iff `L(u) <= L(v)` and `v` is within
//! distance `r` of `u` in the subgraph induced by `{w : L(w) >= L(u)}`. This is
//! a distance in a restricted subgraph, not in `G`: the witnessing path need
//! not be a shortest path of `G`.

use std::collections::VecDeque;

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;
use crate::packing::{pack_paths, Role};
use crate::Rational;

fn check(g: &Graph, order: &LinearOrder, v: Option<Vertex>) -> Result<()> {
    order.check_len(g.n())?;
    if let Some(v) = v {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// BFS from `root` through vertices with `pos >= pos(root)`, depth `<= r`.
/// Calls `visit(v, d)` for every reached `v` at distance `d` (root included).
fn bfs_upward(g: &Graph, order: &LinearOrder, root: Vertex, r: usize, dist: &mut [usize], mut visit: impl FnMut(Vertex, usize)) {
    let floor = order.pos(root);
    let mut seen = vec![root];
    dist[root] = 0;
    let mut head = 0;
    while head < seen.len() {
        let u = seen[head];
        head += 1;
        visit(u, dist[u]);
        if dist[u] == r {
            continue;
        }
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX && order.pos(w) > floor {
                dist[w] = dist[u] + 1;
                seen.push(w);
            }
        }
    }
    for u in seen {
        dist[u] = usize::MAX;
    }
}

/// For every `u`, the vertices `v` with `u` in `WReach_r[v]`, reported as
/// `visit(v, u, layer)` where `layer` is the least radius at which `u` enters.
pub(crate) fn for_each_weak(g: &Graph, order: &LinearOrder, r: usize, mut visit: impl FnMut(Vertex, Vertex, usize)) {
    let mut dist = vec![usize::MAX; g.n()];
    for u in g.vertices() {
        bfs_upward(g, order, u, r, &mut dist, |v, d| visit(v, u, d));
    }
}

/// BFS from `v` through vertices larger than `v`; smaller vertices are
/// recorded but not expanded. Calls `visit(u, d)` for `v` itself and for every
/// strongly reachable `u`.
fn bfs_strong(g: &Graph, order: &LinearOrder, v: Vertex, r: usize, dist: &mut [usize], mut visit: impl FnMut(Vertex, usize)) {
    let top = order.pos(v);
    let mut seen = vec![v];
    dist[v] = 0;
    visit(v, 0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == r {
            continue;
        }
        for &w in g.neighbours(u) {
            if dist[w] != usize::MAX {
                continue;
            }
            dist[w] = dist[u] + 1;
            seen.push(w);
            if order.pos(w) < top {
                visit(w, dist[w]);
            } else {
                queue.push_back(w);
            }
        }
    }
    for u in seen {
        dist[u] = usize::MAX;
    }
}

/// `WReach_r[G, L, v]`, sorted by vertex id.
pub fn wreach(g: &Graph, order: &LinearOrder, v: Vertex, r: usize) -> Result<Vec<Vertex>> {
    check(g, order, Some(v))?;
    let mut dist = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    let candidates = crate::graph::ball_unchecked(g, v, r);
    for u in candidates.into_iter().filter(|&u| !order.less(v, u)) {
        let mut hit = false;
        bfs_upward(g, order, u, r, &mut dist, |w, _| hit |= w == v);
        if hit {
            out.push(u);
        }
    }
    Ok(out)
}

/// `SReach_r[G, L, v]`, sorted by vertex id.
pub fn sreach(g: &Graph, order: &LinearOrder, v: Vertex, r: usize) -> Result<Vec<Vertex>> {
    check(g, order, Some(v))?;
    let mut dist = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    bfs_strong(g, order, v, r, &mut dist, |u, _| out.push(u));
    out.sort_unstable();
    Ok(out)
}

/// All weak reachability sets at once: `result[v] = WReach_r[G, L, v]`.
pub fn wreach_all(g: &Graph, order: &LinearOrder, r: usize) -> Result<Vec<Vec<Vertex>>> {
    check(g, order, None)?;
    let mut sets = vec![Vec::new(); g.n()];
    for_each_weak(g, order, r, |v, u, _| sets[v].push(u));
    sets.iter_mut().for_each(|s| s.sort_unstable());
    Ok(sets)
}

fn adm_roles(g: &Graph, order: &LinearOrder, v: Vertex) -> Vec<Role> {
    g.vertices()
        .map(|w| {
            if order.less(w, v) {
                Role::Target
            } else if order.less(v, w) {
                Role::Internal
            } else {
                Role::Blocked
            }
        })
        .collect()
}

/// `adm_r[G, L, v]`: the largest family of paths of length at most `r` from
/// `v` to vertices not larger than `v`, pairwise meeting only in `v`. The
/// length-0 path is part of every family, so the value is at least 1.
pub fn adm_at(g: &Graph, order: &LinearOrder, v: Vertex, r: usize) -> Result<usize> {
    check(g, order, Some(v))?;
    Ok(1 + pack_paths(g, v, &adm_roles(g, order, v), r).value)
}

/// `max_v |WReach_r[G, L, v]|`.
pub fn eval_wcol(g: &Graph, order: &LinearOrder, r: usize) -> Result<usize> {
    check(g, order, None)?;
    let mut count = vec![0usize; g.n()];
    for_each_weak(g, order, r, |v, _, _| count[v] += 1);
    Ok(count.into_iter().max().unwrap_or(0))
}

/// `max_v |SReach_r[G, L, v]|`.
pub fn eval_col(g: &Graph, order: &LinearOrder, r: usize) -> Result<usize> {
    check(g, order, None)?;
    let mut dist = vec![usize::MAX; g.n()];
    let mut best = 0;
    for v in g.vertices() {
        let mut c = 0;
        bfs_strong(g, order, v, r, &mut dist, |_, _| c += 1);
        best = best.max(c);
    }
    Ok(best)
}

/// `max_v adm_r[G, L, v]`.
pub fn eval_adm(g: &Graph, order: &LinearOrder, r: usize) -> Result<usize> {
    check(g, order, None)?;
    Ok(g.vertices()
        .map(|v| 1 + pack_paths(g, v, &adm_roles(g, order, v), r).value)
        .max()
        .unwrap_or(0))
}

/// Layered reach counts of one order.
///
/// `weak[v][i] = |WReach_i[G,L,v]|` and `strong[v][i] = |SReach_i[G,L,v]|`
/// for `i = 0..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachProfile {
    pub r: usize,
    pub weak: Vec<Vec<u32>>,
    pub strong: Vec<Vec<u32>>,
}

pub fn profile(g: &Graph, order: &LinearOrder, r: usize) -> Result<ReachProfile> {
    check(g, order, None)?;
    let n = g.n();
    let mut weak = vec![vec![0u32; r + 1]; n];
    for_each_weak(g, order, r, |v, _, d| weak[v][d] += 1);
    let mut strong = vec![vec![0u32; r + 1]; n];
    let mut dist = vec![usize::MAX; n];
    for v in 0..n {
        let row = &mut strong[v];
        bfs_strong(g, order, v, r, &mut dist, |_, d| row[d] += 1);
    }
    for row in weak.iter_mut().chain(strong.iter_mut()) {
        for i in 1..=r {
            row[i] += row[i - 1];
        }
    }
    Ok(ReachProfile { r, weak, strong })
}

impl ReachProfile {
    pub fn n(&self) -> usize {
        self.weak.len()
    }

    fn layer_total(rows: &[Vec<u32>], i: usize) -> u64 {
        rows.iter()
            .map(|row| u64::from(row[i]) - if i == 0 { 0 } else { u64::from(row[i - 1]) })
            .sum()
    }

    /// `S_i = sum_v |WReach_i[v] \ WReach_{i-1}[v]|` (and `S_0 = n`).
    pub fn weak_layer_total(&self, i: usize) -> u64 {
        Self::layer_total(&self.weak, i)
    }

    /// `U_i = sum_v |SReach_i[v] \ SReach_{i-1}[v]|` (and `U_0 = n`).
    pub fn strong_layer_total(&self, i: usize) -> u64 {
        Self::layer_total(&self.strong, i)
    }

    fn per_vertex(&self, total: u64) -> Result<Rational> {
        if self.n() == 0 {
            return input("reach statistics of the empty graph are undefined");
        }
        Ok(Rational::new(total as i64, self.n() as i64))
    }

    /// `w_i = S_i / n`.
    pub fn w(&self, i: usize) -> Result<Rational> {
        self.per_vertex(self.weak_layer_total(i))
    }

    /// `c_i = U_i / n`.
    pub fn c(&self, i: usize) -> Result<Rational> {
        self.per_vertex(self.strong_layer_total(i))
    }

    /// `W_r = sum_{i=1..r} w_i`, the mean weak reach excluding the vertex itself.
    pub fn big_w(&self) -> Result<Rational> {
        self.per_vertex((1..=self.r).map(|i| self.weak_layer_total(i)).sum())
    }

    /// `C_r = sum_{i=1..r} c_i`.
    pub fn big_c(&self) -> Result<Rational> {
        self.per_vertex((1..=self.r).map(|i| self.strong_layer_total(i)).sum())
    }

    pub fn max_weak(&self) -> usize {
        self.weak.iter().map(|row| row[self.r] as usize).max().unwrap_or(0)
    }

    pub fn max_strong(&self) -> usize {
        self.strong.iter().map(|row| row[self.r] as usize).max().unwrap_or(0)
    }
}
