//! Simple undirected graphs on dense vertex ids `0..n` and the elementary
//! measurements every other module builds on.

use std::collections::VecDeque;

use crate::error::{input, Result};
use crate::Rational;

pub mod io;
pub mod named;
pub mod random;

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// An immutable simple undirected graph.
///
/// Neighbour lists are kept sorted, there are no loops and no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge {{{u},{v}}} out of range for n = {n}"));
            }
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return input(format!("duplicate edge {{{v},{}}}", w[0]));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Like [`Graph::from_edges`] but silently merges parallel edges. Loops
    /// and out-of-range endpoints still panic; this is for generators.
    pub(crate) fn from_edges_merged<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v && u < n && v < n, "bad generated edge ({u},{v})");
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice_m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    #[inline]
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            input(format!("vertex {v} out of range for n = {}", self.n()))
        }
    }

    /// Subgraph induced by `keep` (a membership mask). Returns the subgraph
    /// and the map from new ids to old ids.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (new_id[u], new_id[v]));
        (Graph::from_edges_merged(old.len(), edges), old)
    }
}

/// BFS distances from `source`, restricted to vertices where `allowed` holds
/// (the source itself is always visited). Unreached vertices are `None`.
pub fn distances_within(g: &Graph, source: Vertex, allowed: impl Fn(Vertex) -> bool) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbours(u) {
            if dist[w].is_none() && allowed(w) {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    distances_within(g, source, |_| true)
}

/// The closed `r`-neighbourhood of `v`, sorted.
pub fn bfs_ball(g: &Graph, v: Vertex, r: usize) -> Result<Vec<Vertex>> {
    g.check_vertex(v)?;
    Ok(ball_unchecked(g, v, r))
}

pub(crate) fn ball_unchecked(g: &Graph, v: Vertex, r: usize) -> Vec<Vertex> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut out = vec![v];
    let mut head = 0;
    while head < out.len() {
        let u = out[head];
        head += 1;
        if dist[u] == r {
            continue;
        }
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            // Every cycle through s closes at depth at most best/2.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Replaces every edge by a path with exactly `s` new internal vertices.
///
/// Original vertices keep their ids. The internal vertices of the `i`-th edge
/// (in [`Graph::edges`] order) are `n + i*s .. n + (i+1)*s`, listed from the
/// smaller endpoint towards the larger one.
pub fn subdivide(g: &Graph, s: usize) -> Graph {
    if s == 0 {
        return g.clone();
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(g.m() * (s + 1));
    for (i, (u, v)) in g.edges().enumerate() {
        let base = n + i * s;
        edges.push((u, base));
        for j in 1..s {
            edges.push((base + j - 1, base + j));
        }
        edges.push((base + s - 1, v));
    }
    Graph::from_edges_merged(n + s * g.m(), edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges_merged(n, edges.filter(|&(u, v)| !g.has_edge(u, v)))
}

/// `|E| / |V|` as an exact rational.
pub fn edge_density(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return input("edge density of the empty graph is undefined");
    }
    Ok(Rational::new(g.m() as i64, g.n() as i64))
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

/// `min_u max_v dist(u, v)`, `None` if disconnected or empty.
pub fn radius(g: &Graph) -> Option<usize> {
    if g.n() == 0 || !is_connected(g) {
        return None;
    }
    g.vertices()
        .map(|u| distances(g, u).into_iter().map(|d| d.unwrap()).max().unwrap())
        .min()
}

/// A graph together with a proper two-sided partition of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    /// `1` or `2` for each vertex.
    side: Vec<u8>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, side: Vec<u8>) -> Result<Self> {
        if side.len() != graph.n() {
            return input(format!(
                "partition has {} entries for {} vertices",
                side.len(),
                graph.n()
            ));
        }
        if let Some(v) = side.iter().position(|&s| s != 1 && s != 2) {
            return input(format!("vertex {v} has side {}, expected 1 or 2", side[v]));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| side[u] == side[v]) {
            return input(format!("edge {{{u},{v}}} lies inside side {}", side[u]));
        }
        Ok(BipartiteGraph { graph, side })
    }

    /// Two-colours `graph` by BFS; the smallest vertex of each component goes
    /// to side 1.
    pub fn from_two_colouring(graph: Graph) -> Result<Self> {
        let mut side = vec![0u8; graph.n()];
        for comp in components(&graph) {
            let s = comp[0];
            side[s] = 1;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in graph.neighbours(u) {
                    if side[w] == 0 {
                        side[w] = 3 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return input("graph is not bipartite");
                    }
                }
            }
        }
        BipartiteGraph::new(graph, side)
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete(a: usize, b: usize) -> Self {
        let graph = named::complete_bipartite(a, b);
        let side = (0..a + b).map(|v| if v < a { 1 } else { 2 }).collect();
        BipartiteGraph { graph, side }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn side(&self, v: Vertex) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    /// Vertices of side `s` (1 or 2), sorted.
    pub fn part(&self, s: u8) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| self.side[v] == s).collect()
    }
}

impl From<BipartiteGraph> for Graph {
    fn from(bg: BipartiteGraph) -> Graph {
        bg.graph
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}
