//! Packing of length-bounded paths from one source that pairwise meet only at
//! the source.
//!
//! Both `adm_r[G,L,v]` and `b_r(S,v)` are instances: each path leaves the
//! source, runs through *internal* vertices and stops at a distinct *target*.
//! Bounded-length disjoint-path packing has no known polynomial algorithm, so
//! the value is sandwiched between a greedy shortest-path packing and an
//! unbounded-length vertex-disjoint max-flow; when the two disagree an
//! exhaustive branch-and-bound settles it.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// What a vertex may be used for in a packing instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Blocked,
    Internal,
    Target,
}

/// Result of a packing computation. `value` is exact; `greedy` and `flow` are
/// the lower and upper bounds it was sandwiched between.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Packing {
    pub value: usize,
    pub greedy: usize,
    pub flow: usize,
    pub exhaustive: bool,
}

/// Maximum number of paths of length `1..=max_len` from `source` to distinct
/// targets whose inner vertices are internal and which pairwise share only
/// `source`. The trivial path is not counted.
///
/// `roles[source]` is ignored; targets and internal vertices are disjoint by
/// construction of [`Role`].
pub fn pack_paths(g: &Graph, source: Vertex, roles: &[Role], max_len: usize) -> Packing {
    if max_len == 0 {
        return Packing { value: 0, greedy: 0, flow: 0, exhaustive: false };
    }
    let mut roles = roles.to_vec();
    roles[source] = Role::Blocked;

    // A target adjacent to the source is always used by the direct edge: any
    // packing routing a longer path to it, or ignoring it, can be rerouted.
    let mut direct = 0;
    for &w in g.neighbours(source) {
        if roles[w] == Role::Target {
            direct += 1;
            roles[w] = Role::Blocked;
        }
    }
    if max_len == 1 {
        return Packing { value: direct, greedy: direct, flow: direct, exhaustive: false };
    }

    let inst = Reduced::new(g, source, roles, max_len);
    let greedy = inst.greedy();
    let flow = inst.flow_bound();
    debug_assert!(greedy <= flow);
    let (value, exhaustive) = if greedy == flow {
        (greedy, false)
    } else {
        (inst.exhaustive(greedy, flow), true)
    };
    Packing {
        value: direct + value,
        greedy: direct + greedy,
        flow: direct + flow,
        exhaustive,
    }
}

/// Instance with direct targets removed and unusable vertices pruned.
struct Reduced<'a> {
    g: &'a Graph,
    source: Vertex,
    roles: Vec<Role>,
    max_len: usize,
    /// Distance to the nearest target through internal vertices.
    to_target: Vec<usize>,
    /// Internal neighbours of the source that can start a path.
    first_hops: Vec<Vertex>,
}

const FAR: usize = usize::MAX / 4;

impl<'a> Reduced<'a> {
    fn new(g: &'a Graph, source: Vertex, mut roles: Vec<Role>, max_len: usize) -> Self {
        let n = g.n();
        let from_source = {
            let mut d = vec![FAR; n];
            d[source] = 0;
            let mut q = VecDeque::from([source]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbours(u) {
                    if d[w] == FAR && roles[w] != Role::Blocked {
                        d[w] = d[u] + 1;
                        if roles[w] == Role::Internal {
                            q.push_back(w);
                        }
                    }
                }
            }
            d
        };
        let mut to_target = vec![FAR; n];
        let mut q = VecDeque::new();
        for v in 0..n {
            if roles[v] == Role::Target {
                to_target[v] = 0;
                q.push_back(v);
            }
        }
        while let Some(u) = q.pop_front() {
            for &w in g.neighbours(u) {
                if to_target[w] == FAR && roles[w] == Role::Internal {
                    to_target[w] = to_target[u] + 1;
                    q.push_back(w);
                }
            }
        }
        for v in 0..n {
            let usable = match roles[v] {
                Role::Blocked => true,
                Role::Internal => from_source[v].saturating_add(to_target[v]) <= max_len,
                Role::Target => from_source[v] <= max_len,
            };
            if !usable {
                roles[v] = Role::Blocked;
            }
        }
        let first_hops = g
            .neighbours(source)
            .iter()
            .copied()
            .filter(|&w| roles[w] == Role::Internal)
            .collect();
        Reduced { g, source, roles, max_len, to_target, first_hops }
    }

    /// Repeatedly takes a shortest available path.
    fn greedy(&self) -> usize {
        let n = self.g.n();
        let mut used = vec![false; n];
        let mut count = 0;
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        loop {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            depth.iter_mut().for_each(|d| *d = usize::MAX);
            depth[self.source] = 0;
            let mut q = VecDeque::from([self.source]);
            let mut found = None;
            'bfs: while let Some(u) = q.pop_front() {
                if depth[u] >= self.max_len {
                    continue;
                }
                for &w in self.g.neighbours(u) {
                    if used[w] || depth[w] != usize::MAX {
                        continue;
                    }
                    match self.roles[w] {
                        Role::Blocked => {}
                        Role::Target => {
                            parent[w] = u;
                            found = Some(w);
                            break 'bfs;
                        }
                        Role::Internal => {
                            depth[w] = depth[u] + 1;
                            parent[w] = u;
                            q.push_back(w);
                        }
                    }
                }
            }
            let Some(mut t) = found else { break };
            count += 1;
            while t != self.source {
                used[t] = true;
                t = parent[t];
            }
        }
        count
    }

    /// Max number of internally disjoint source-to-target paths with no length
    /// limit (Menger), via unit-capacity augmenting paths on the split graph.
    fn flow_bound(&self) -> usize {
        let n = self.g.n();
        // Node v splits into in = 2v, out = 2v+1; sink = 2n.
        let sink = 2 * n;
        let mut net = FlowNet::new(2 * n + 1);
        for v in 0..n {
            match self.roles[v] {
                Role::Blocked => {}
                Role::Internal => {
                    net.add_edge(2 * v, 2 * v + 1);
                    for &w in self.g.neighbours(v) {
                        if self.roles[w] != Role::Blocked {
                            net.add_edge(2 * v + 1, 2 * w);
                        }
                    }
                }
                Role::Target => net.add_edge(2 * v, sink),
            }
        }
        for &w in &self.first_hops {
            net.add_edge(2 * self.source + 1, 2 * w);
        }
        net.max_flow(2 * self.source + 1, sink, self.first_hops.len())
    }

    fn exhaustive(&self, lower: usize, upper: usize) -> usize {
        let mut search = Search {
            inst: self,
            used: vec![false; self.g.n()],
            best: lower,
            upper,
        };
        search.branch(0, 0);
        search.best
    }
}

struct Search<'r, 'a> {
    inst: &'r Reduced<'a>,
    used: Vec<bool>,
    best: usize,
    upper: usize,
}

impl Search<'_, '_> {
    /// Decides, for each first hop in turn, whether a path starts there.
    fn branch(&mut self, idx: usize, count: usize) {
        let hops = &self.inst.first_hops;
        if count > self.best {
            self.best = count;
        }
        if self.best >= self.upper || idx == hops.len() || count + (hops.len() - idx) <= self.best {
            return;
        }
        let x = hops[idx];
        if !self.used[x] {
            self.used[x] = true;
            let mut trail = vec![x];
            self.extend(&mut trail, idx, count);
            self.used[x] = false;
        }
        self.branch(idx + 1, count);
    }

    /// Extends the partial path `trail` (starting at a first hop) in every
    /// possible way; each completed path continues the branching.
    fn extend(&mut self, trail: &mut Vec<Vertex>, idx: usize, count: usize) {
        let inst = self.inst;
        let u = *trail.last().unwrap();
        let len = trail.len(); // edges so far, counting the source edge
        for &w in inst.g.neighbours(u) {
            if self.best >= self.upper {
                return;
            }
            if self.used[w] || w == inst.source {
                continue;
            }
            match inst.roles[w] {
                Role::Blocked => {}
                Role::Target => {
                    if len < inst.max_len {
                        self.used[w] = true;
                        self.branch(idx + 1, count + 1);
                        self.used[w] = false;
                    }
                }
                Role::Internal => {
                    if len + 1 + inst.to_target[w] <= inst.max_len {
                        self.used[w] = true;
                        trail.push(w);
                        self.extend(trail, idx, count);
                        trail.pop();
                        self.used[w] = false;
                    }
                }
            }
        }
    }
}

/// Tiny residual network for unit-capacity flow.
struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let nodes = self.head.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        while flow < limit {
            via.iter_mut().for_each(|e| *e = usize::MAX);
            let mut q = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = q.pop_front() {
                if u == t {
                    reached = true;
                    break;
                }
                for &e in &self.head[u] {
                    let w = self.to[e];
                    if self.cap[e] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = e;
                        q.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
