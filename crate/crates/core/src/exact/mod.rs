//! Exact generalised colouring numbers, treewidth and treedepth for small
//! graphs, plus the brute-force biclique test.
//!
//! Vertex sets are `u128` bitmasks, so no exact solver accepts more than 128
//! vertices; the configured cap is normally far lower.

mod strong;
mod weak;
mod width;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{BipartiteGraph, Graph, Vertex};
use crate::order::LinearOrder;

pub use strong::{adm_exact, col_exact};
pub use weak::wcol_exact;
pub(crate) use width::treewidth_order;
pub use width::{treedepth_small, treewidth_small};

/// Hard limit imposed by the bitmask representation.
pub const MASK_LIMIT: usize = 128;

/// Size cap and search budget shared by every exact solver.
#[derive(Clone, Copy, Debug)]
pub struct ExactConfig {
    pub max_vertices: usize,
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_vertices: 11,
            node_budget: 20_000_000,
        }
    }
}

impl ExactConfig {
    pub fn with_cap(max_vertices: usize) -> Self {
        ExactConfig {
            max_vertices,
            ..Self::default()
        }
    }

    pub(crate) fn admit(&self, g: &Graph, what: &'static str) -> Result<()> {
        let cap = self.max_vertices.min(MASK_LIMIT);
        if g.n() > cap {
            return Err(Error::TooLarge {
                what,
                estimate: g.n() as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }
}

/// An exact value together with an order attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exact {
    pub value: usize,
    #[serde(serialize_with = "ranks")]
    pub order: LinearOrder,
    pub nodes: u64,
}

fn ranks<S: serde::Serializer>(o: &LinearOrder, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq((0..o.len()).map(|v| o.rank(v)))
}

/// Search-node accounting shared by the solvers.
pub(crate) struct Budget {
    pub nodes: u64,
    limit: u64,
}

pub(crate) struct OutOfBudget;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { nodes: 0, limit }
    }

    #[inline]
    pub fn tick(&mut self) -> std::result::Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.limit {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }
}

#[inline]
pub(crate) fn bit(v: Vertex) -> u128 {
    1u128 << v
}

pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as Vertex;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Adjacency as bitmasks.
pub(crate) struct MaskGraph {
    pub adj: Vec<u128>,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= MASK_LIMIT);
        MaskGraph {
            adj: g
                .vertices()
                .map(|v| g.neighbours(v).iter().fold(0, |m, &w| m | bit(w)))
                .collect(),
        }
    }

    pub fn full(&self) -> u128 {
        match self.adj.len() {
            MASK_LIMIT => u128::MAX,
            n => bit(n) - 1,
        }
    }

    #[inline]
    pub fn neighbourhood(&self, set: u128) -> u128 {
        bits(set).fold(0, |m, v| m | self.adj[v])
    }

    /// Vertices within distance `r` of `v` in the subgraph induced by `within`.
    pub fn ball(&self, within: u128, v: Vertex, r: usize) -> u128 {
        let mut reached = bit(v);
        let mut frontier = reached;
        for _ in 0..r {
            frontier = self.neighbourhood(frontier) & within & !reached;
            if frontier == 0 {
                break;
            }
            reached |= frontier;
        }
        reached
    }

    pub fn component(&self, within: u128, v: Vertex) -> u128 {
        self.ball(within, v, usize::MAX)
    }

    pub fn components(&self, mut within: u128) -> Vec<u128> {
        let mut out = Vec::new();
        while within != 0 {
            let c = self.component(within, within.trailing_zeros() as Vertex);
            within &= !c;
            out.push(c);
        }
        out
    }
}

pub(crate) fn resource(what: &'static str, nodes: u64, lower: usize, upper: usize) -> Error {
    Error::Resource {
        what,
        nodes,
        lower: lower as u64,
        upper: upper as u64,
    }
}

/// Degeneracy: the least `d` such that every subgraph has a vertex of degree
/// at most `d`.
pub fn degeneracy(g: &Graph) -> usize {
    crate::heuristics::peel(g).1
}

/// Whether `K_{k,k}` is a subgraph with one side in each part.
pub fn biclique_bruteforce(bg: &BipartiteGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return input("biclique size must be at least 1");
    }
    let (a, b) = (bg.part(1), bg.part(2));
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let g = bg.graph();
    let mut common = vec![0usize; g.n()];
    for pick in small.iter().copied().combinations(k) {
        common.iter_mut().for_each(|c| *c = 0);
        for &u in &pick {
            for &w in g.neighbours(u) {
                common[w] += 1;
            }
        }
        if large.iter().filter(|&&w| common[w] == k).count() >= k {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exact `col_r` and `adm_r` against the bound
/// `col_r <= (adm_r - 1)(adm_r - 2)^(r-1) + 1`, reported but never enforced:
/// counting the trivial path in `adm_r` makes the bound false on paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColAdmRelation {
    pub r: usize,
    pub col: usize,
    pub adm: usize,
    pub bound: u128,
    pub holds: bool,
}

pub fn col_adm_relation(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<ColAdmRelation> {
    if r == 0 {
        return input("relation needs r >= 1");
    }
    let col = col_exact(g, r, cfg)?.value;
    let adm = adm_exact(g, r, cfg)?.value;
    let a = adm as u128;
    let bound = a
        .saturating_sub(1)
        .saturating_mul(a.saturating_sub(2).saturating_pow(r as u32 - 1))
        .saturating_add(1);
    Ok(ColAdmRelation {
        r,
        col,
        adm,
        bound,
        holds: col as u128 <= bound,
    })
}

/// Lower bound shared by the three colouring numbers: `1` at radius 0 and
/// `degeneracy + 1` otherwise (all three equal it at radius 1 and grow with r).
pub(crate) fn base_lower(g: &Graph, r: usize) -> usize {
    match (g.n(), r) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => degeneracy(g) + 1,
    }
}

/// Best of a few cheap orders under `eval`.
pub(crate) fn heuristic_upper(
    g: &Graph,
    eval: impl Fn(&LinearOrder) -> usize,
    extra: Option<LinearOrder>,
) -> (usize, LinearOrder) {
    let deg = crate::heuristics::degeneracy_order(g);
    let mut cands = vec![deg.reversed(), deg, LinearOrder::identity(g.n())];
    cands.extend(extra);
    cands
        .into_iter()
        .map(|o| (eval(&o), o))
        .min_by_key(|(v, _)| *v)
        .expect("candidate list is non-empty")
}
