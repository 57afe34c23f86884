//! Exact `wcol_r`.
//!
//! The search builds the order from the smallest vertex up. Once the vertices
//! below `u` are placed, `u` lies in `WReach_r[w]` exactly for the `w` within
//! distance `r` of `u` in the subgraph `G[R]` induced by the unplaced set `R`.
//! So each placement bumps a fixed set of counters, and the state is
//! `(R, counters on R)`. Components of `G[R]` never interact again and are
//! solved independently.
//!
//! For a threshold `t` a vertex with counter `t - 1` is saturated: the first
//! vertex placed from its `r`-ball would push it over, unless that vertex is
//! itself. Hence a saturated vertex may be placed next without loss, and two
//! saturated vertices within distance `r` refute the state.

use std::collections::{HashMap, HashSet};

use super::{bit, bits, resource, Budget, Exact, ExactConfig, MaskGraph, OutOfBudget};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;
use crate::reach::eval_wcol;

type Key = (u128, Box<[u8]>);

struct Search<'a> {
    mg: &'a MaskGraph,
    r: usize,
    /// Counters must stay below `cap = t - 1` for unplaced vertices.
    cap: u8,
    counts: Vec<u8>,
    memo: HashMap<Key, Option<Vertex>>,
    budget: Budget,
}

impl Search<'_> {
    fn key(&self, comp: u128) -> Key {
        (comp, bits(comp).map(|v| self.counts[v]).collect())
    }

    fn solve(&mut self, comp: u128) -> std::result::Result<bool, OutOfBudget> {
        if comp == 0 {
            return Ok(true);
        }
        let key = self.key(comp);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.is_some());
        }
        self.budget.tick()?;
        let choice = self.choose(comp)?;
        self.memo.insert(key, choice);
        Ok(choice.is_some())
    }

    fn candidates(&self, comp: u128) -> Option<Vec<Vertex>> {
        let saturated: Vec<Vertex> = bits(comp).filter(|&v| self.counts[v] == self.cap).collect();
        if let Some(&w) = saturated.first() {
            for &s in &saturated {
                let others = saturated.iter().fold(0, |m, &x| m | bit(x)) & !bit(s);
                if self.mg.ball(comp, s, self.r) & others != 0 {
                    return None;
                }
            }
            return Some(vec![w]);
        }
        // Twins with equal counters are interchangeable; keep one of each class.
        let mut open = HashSet::new();
        let mut closed = HashSet::new();
        let mut out: Vec<Vertex> = bits(comp)
            .filter(|&v| {
                let nb = self.mg.adj[v] & comp;
                let c = self.counts[v];
                open.insert((nb, c)) & closed.insert((nb | bit(v), c))
            })
            .collect();
        out.sort_by_key(|&v| std::cmp::Reverse((self.mg.adj[v] & comp).count_ones()));
        Some(out)
    }

    fn choose(&mut self, comp: u128) -> std::result::Result<Option<Vertex>, OutOfBudget> {
        let Some(cands) = self.candidates(comp) else {
            return Ok(None);
        };
        for u in cands {
            let ball = self.mg.ball(comp, u, self.r) & !bit(u);
            if bits(ball).any(|w| self.counts[w] >= self.cap) {
                continue;
            }
            bits(ball).for_each(|w| self.counts[w] += 1);
            let mut parts = self.mg.components(comp & !bit(u));
            parts.sort_by_key(|c| c.count_ones());
            let mut ok = true;
            for part in parts {
                if !self.solve(part)? {
                    ok = false;
                    break;
                }
            }
            bits(ball).for_each(|w| self.counts[w] -= 1);
            if ok {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    /// Replays memoised choices into a smallest-first sequence.
    fn replay(&mut self, comp: u128, out: &mut Vec<Vertex>) {
        if comp == 0 {
            return;
        }
        let u = self.memo[&self.key(comp)].expect("replay follows feasible states");
        out.push(u);
        let ball = self.mg.ball(comp, u, self.r) & !bit(u);
        bits(ball).for_each(|w| self.counts[w] += 1);
        for part in self.mg.components(comp & !bit(u)) {
            self.replay(part, out);
        }
        bits(ball).for_each(|w| self.counts[w] -= 1);
    }
}

/// Exact `wcol_r(G)` with a witnessing order.
pub fn wcol_exact(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<Exact> {
    cfg.admit(g, "wcol_exact")?;
    let lower = super::base_lower(g, r);
    let (upper, fallback) = super::heuristic_upper(g, |o| eval_wcol(g, o, r).unwrap(), None);
    let mg = MaskGraph::new(g);
    let mut nodes = 0;
    for t in lower..upper {
        let mut s = Search {
            mg: &mg,
            r,
            cap: (t - 1) as u8,
            counts: vec![0; g.n()],
            memo: HashMap::new(),
            budget: Budget::new(cfg.node_budget.saturating_sub(nodes)),
        };
        let comps = mg.components(mg.full());
        let mut feasible = true;
        for &c in &comps {
            match s.solve(c) {
                Ok(true) => {}
                Ok(false) => {
                    feasible = false;
                    break;
                }
                Err(OutOfBudget) => return Err(resource("wcol_exact", nodes + s.budget.nodes, t, upper)),
            }
        }
        nodes += s.budget.nodes;
        if feasible {
            let mut seq = Vec::with_capacity(g.n());
            for c in comps {
                s.replay(c, &mut seq);
            }
            let order = LinearOrder::from_sequence(seq)?;
            debug_assert_eq!(eval_wcol(g, &order, r).unwrap(), t);
            return Ok(Exact { value: t, order, nodes });
        }
    }
    Ok(Exact {
        value: upper,
        order: fallback,
        nodes,
    })
}
