//! Exact `col_r` and `adm_r` by building orders from the largest vertex down.
//!
//! When `x` is placed as the largest of the unplaced set `U`, everything
//! larger than `x` is exactly `V \ U`, so both `|SReach_r[x]|` and
//! `adm_r[x]` are already determined. Feasibility under a threshold depends
//! on `U` alone, so failing sets are memoised.

use std::collections::HashSet;

use super::{bit, bits, resource, Budget, Exact, ExactConfig, MaskGraph, OutOfBudget};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;
use crate::packing::{pack_paths, Role};
use crate::reach::{eval_adm, eval_col};

struct Search<F> {
    cost: F,
    t: usize,
    failed: HashSet<u128>,
    budget: Budget,
}

impl<F: Fn(Vertex, u128) -> usize> Search<F> {
    /// Pushes the witness smallest-first on success.
    fn solve(&mut self, unplaced: u128, out: &mut Vec<Vertex>) -> std::result::Result<bool, OutOfBudget> {
        if unplaced == 0 {
            return Ok(true);
        }
        if self.failed.contains(&unplaced) {
            return Ok(false);
        }
        self.budget.tick()?;
        for x in bits(unplaced) {
            if (self.cost)(x, unplaced) <= self.t && self.solve(unplaced & !bit(x), out)? {
                out.push(x);
                return Ok(true);
            }
        }
        self.failed.insert(unplaced);
        Ok(false)
    }
}

fn run(
    g: &Graph,
    r: usize,
    cfg: &ExactConfig,
    what: &'static str,
    cost: impl Fn(Vertex, u128) -> usize,
    eval: impl Fn(&LinearOrder) -> usize,
) -> Result<Exact> {
    cfg.admit(g, what)?;
    let lower = super::base_lower(g, r);
    let (upper, fallback) = super::heuristic_upper(g, eval, None);
    let full = MaskGraph::new(g).full();
    let mut s = Search {
        cost,
        t: 0,
        failed: HashSet::new(),
        budget: Budget::new(cfg.node_budget),
    };
    for t in lower..upper {
        s.t = t;
        s.failed.clear();
        let mut seq = Vec::with_capacity(g.n());
        match s.solve(full, &mut seq) {
            Ok(true) => {
                return Ok(Exact {
                    value: t,
                    order: LinearOrder::from_sequence(seq)?,
                    nodes: s.budget.nodes,
                })
            }
            Ok(false) => {}
            Err(OutOfBudget) => return Err(resource(what, s.budget.nodes, t, upper)),
        }
    }
    Ok(Exact {
        value: upper,
        order: fallback,
        nodes: s.budget.nodes,
    })
}

/// Exact `col_r(G)` with a witnessing order.
pub fn col_exact(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<Exact> {
    cfg.admit(g, "col_exact")?;
    let mg = MaskGraph::new(g);
    let full = mg.full();
    // 1 + the unplaced vertices reachable from x through placed vertices.
    let cost = |x: Vertex, unplaced: u128| {
        let placed = full & !unplaced;
        let mut seen = bit(x);
        let mut frontier = seen;
        let mut hit = 0u128;
        for _ in 0..r {
            let next = mg.neighbourhood(frontier) & !seen;
            seen |= next;
            hit |= next & unplaced;
            frontier = next & placed;
            if frontier == 0 {
                break;
            }
        }
        1 + hit.count_ones() as usize
    };
    run(g, r, cfg, "col_exact", cost, |o| eval_col(g, o, r).unwrap())
}

/// Exact `adm_r(G)` with a witnessing order.
pub fn adm_exact(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<Exact> {
    cfg.admit(g, "adm_exact")?;
    let cost = |x: Vertex, unplaced: u128| {
        let roles: Vec<Role> = g
            .vertices()
            .map(|v| if unplaced >> v & 1 == 1 { Role::Target } else { Role::Internal })
            .collect();
        1 + pack_paths(g, x, &roles, r).value
    };
    run(g, r, cfg, "adm_exact", cost, |o| eval_adm(g, o, r).unwrap())
}
