//! Treewidth by simulated elimination and treedepth by root recursion.

use std::collections::HashMap;

use super::{bit, bits, resource, Budget, ExactConfig, MaskGraph, OutOfBudget};
use crate::error::Result;
use crate::graph::Graph;

struct Elimination {
    memo: HashMap<u128, usize>,
    budget: Budget,
}

impl Elimination {
    /// Least achievable maximum elimination degree for the remaining graph
    /// `adj` (fill edges already added) on vertex set `rest`.
    fn best(&mut self, rest: u128, adj: &[u128]) -> std::result::Result<usize, OutOfBudget> {
        if rest.count_ones() <= 1 {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&rest) {
            return Ok(v);
        }
        self.budget.tick()?;
        // A simplicial vertex can always be eliminated first.
        let simplicial = bits(rest).find(|&v| {
            let nb = adj[v] & rest;
            bits(nb).all(|u| nb & !bit(u) & !adj[u] == 0)
        });
        let cands: Vec<usize> = match simplicial {
            Some(v) => vec![v],
            None => bits(rest).collect(),
        };
        let mut best = usize::MAX;
        for v in cands {
            let nb = adj[v] & rest;
            let deg = nb.count_ones() as usize;
            if deg >= best {
                continue;
            }
            let mut next = adj.to_vec();
            for u in bits(nb) {
                next[u] |= nb & !bit(u);
            }
            let sub = self.best(rest & !bit(v), &next)?;
            best = best.min(deg.max(sub));
        }
        self.memo.insert(rest, best);
        Ok(best)
    }
}

/// Exact treewidth as the minimum over elimination orders of the largest
/// neighbourhood met when eliminating (each elimination turns the remaining
/// neighbourhood into a clique).
pub fn treewidth_small(g: &Graph, cfg: &ExactConfig) -> Result<usize> {
    cfg.admit(g, "treewidth_small")?;
    let mg = MaskGraph::new(g);
    let mut e = Elimination {
        memo: HashMap::new(),
        budget: Budget::new(cfg.node_budget),
    };
    e.best(mg.full(), &mg.adj)
        .map_err(|_| resource("treewidth_small", e.budget.nodes, 0, g.n().saturating_sub(1)))
}

struct Depth<'a> {
    mg: &'a MaskGraph,
    memo: HashMap<u128, usize>,
    budget: Budget,
}

impl Depth<'_> {
    fn td(&mut self, set: u128) -> std::result::Result<usize, OutOfBudget> {
        match set.count_ones() {
            0 => return Ok(0),
            1 => return Ok(1),
            _ => {}
        }
        if let Some(&d) = self.memo.get(&set) {
            return Ok(d);
        }
        self.budget.tick()?;
        let comps = self.mg.components(set);
        let d = if comps.len() > 1 {
            let mut worst = 0;
            for c in comps {
                worst = worst.max(self.td(c)?);
            }
            worst
        } else {
            let mut best = usize::MAX;
            for v in bits(set) {
                best = best.min(1 + self.td(set & !bit(v))?);
            }
            best
        };
        self.memo.insert(set, d);
        Ok(d)
    }
}

/// Exact treedepth: one more than the best treedepth after deleting a root,
/// maximised over components.
pub fn treedepth_small(g: &Graph, cfg: &ExactConfig) -> Result<usize> {
    cfg.admit(g, "treedepth_small")?;
    let mg = MaskGraph::new(g);
    let mut d = Depth {
        mg: &mg,
        memo: HashMap::new(),
        budget: Budget::new(cfg.node_budget),
    };
    d.td(mg.full())
        .map_err(|_| resource("treedepth_small", d.budget.nodes, 1, g.n()))
}

/// An elimination order attaining the treewidth.
pub(crate) fn treewidth_order(g: &Graph, cfg: &ExactConfig) -> Result<(usize, Vec<usize>)> {
    let width = treewidth_small(g, cfg)?;
    let mg = MaskGraph::new(g);
    let mut e = Elimination {
        memo: HashMap::new(),
        budget: Budget::new(cfg.node_budget),
    };
    let fail = |n| resource("treewidth_small", n, width, width);
    let mut rest = mg.full();
    let mut adj = mg.adj.clone();
    let mut order = Vec::with_capacity(g.n());
    while rest != 0 {
        let target = e.best(rest, &adj).map_err(|_| fail(e.budget.nodes))?;
        let mut chosen = None;
        for v in bits(rest) {
            let nb = adj[v] & rest;
            let mut next = adj.clone();
            for u in bits(nb) {
                next[u] |= nb & !bit(u);
            }
            let sub = e.best(rest & !bit(v), &next).map_err(|_| fail(e.budget.nodes))?;
            if (nb.count_ones() as usize).max(sub) <= target {
                chosen = Some((v, next));
                break;
            }
        }
        let (v, next) = chosen.expect("some vertex attains the optimum");
        order.push(v);
        adj = next;
        rest &= !bit(v);
    }
    Ok((width, order))
}
