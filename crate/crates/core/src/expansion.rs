//! Brute-force topological grad `∇̃_r` for tiny graphs and the admissibility
//! bound `adm_r <= 6r (∇̃_{r-1})^3` checked against it.
//!
//! `H` is a depth-`r` topological minor of `G` when `G` contains a subdivision
//! of `H` in which every edge becomes a path of length at most `2r + 1`.
//! `∇̃_r(G)` is the largest `|E(H)| / |V(H)|` over such `H`.

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exact::{adm_exact, bit, bits, Budget, ExactConfig, MaskGraph};
use crate::graph::{Graph, Vertex};
use crate::Rational;

/// Default vertex cap for [`top_grad_bruteforce`].
pub const TGRAD_CAP: usize = 12;

/// The densest topological minor found, with its embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopGrad {
    pub r: usize,
    #[serde(serialize_with = "as_string")]
    pub value: Rational,
    /// Branch vertices of the minor.
    pub branch: Vec<Vertex>,
    /// One path of `G` per edge of the minor, endpoints first and last.
    pub paths: Vec<Vec<Vertex>>,
    pub nodes: u64,
}

pub(crate) fn as_string<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Connection options for one non-adjacent branch pair: minimal sets of
/// internal vertices, each with a path realising it.
struct Pair {
    options: Vec<(u128, Vec<Vertex>)>,
}

struct Search<'a> {
    mg: &'a MaskGraph,
    budget: Budget,
    /// Longest allowed path, in edges.
    max_len: usize,
}

impl Search<'_> {
    /// Paths `x .. y` of length `2..=max_len` with internals in `free`.
    fn routes(&mut self, x: Vertex, y: Vertex, free: u128) -> Option<Pair> {
        let mut found: Vec<(u128, Vec<Vertex>)> = Vec::new();
        let mut path = vec![x];
        self.extend(y, free, 0, &mut path, &mut found)?;
        // keep inclusion-minimal internal sets
        found.sort_by_key(|(m, _)| m.count_ones());
        let mut options: Vec<(u128, Vec<Vertex>)> = Vec::new();
        for (m, p) in found {
            if options.iter().all(|(o, _)| o & m != *o) {
                options.push((m, p));
            }
        }
        Some(Pair { options })
    }

    fn extend(&mut self, y: Vertex, free: u128, used: u128, path: &mut Vec<Vertex>, out: &mut Vec<(u128, Vec<Vertex>)>) -> Option<()> {
        self.budget.tick().ok()?;
        let last = *path.last().unwrap();
        if path.len() > 1 && self.mg.adj[last] & bit(y) != 0 {
            let mut p = path.clone();
            p.push(y);
            out.push((used, p));
        }
        // another internal vertex still leaves room for the final edge
        if path.len() < self.max_len {
            for w in bits(self.mg.adj[last] & free & !used) {
                path.push(w);
                self.extend(y, free, used | bit(w), path, out)?;
                path.pop();
            }
        }
        Some(())
    }

    /// Packs internally disjoint routes, recording in `best` any choice
    /// that connects at least `need` pairs and then raising `need`.
    /// `usize::MAX` in a choice marks a pair left unconnected.
    fn pack(&mut self, pairs: &[&Pair], used: u128, chosen: &mut Vec<usize>, best: &mut Option<Vec<usize>>, need: &mut usize) -> std::result::Result<(), ()> {
        self.budget.tick().map_err(|_| ())?;
        let done = chosen.iter().filter(|&&c| c != usize::MAX).count();
        let rest = &pairs[chosen.len()..];
        let Some(first) = rest.first() else {
            if done >= *need {
                *best = Some(chosen.clone());
                *need = done + 1;
            }
            return Ok(());
        };
        let open = rest.iter().filter(|p| p.options.iter().any(|(m, _)| m & used == 0)).count();
        if done + open < *need {
            return Ok(());
        }
        for (i, (m, _)) in first.options.iter().enumerate() {
            if m & used == 0 {
                chosen.push(i);
                self.pack(pairs, used | m, chosen, best, need)?;
                chosen.pop();
            }
        }
        chosen.push(usize::MAX);
        self.pack(pairs, used, chosen, best, need)?;
        chosen.pop();
        Ok(())
    }
}

/// Exhaustive `∇̃_r` for graphs with at most [`TGRAD_CAP`] vertices.
pub fn top_grad_bruteforce(g: &Graph, r: usize, budget: u64) -> Result<TopGrad> {
    if g.n() > TGRAD_CAP {
        return Err(Error::TooLarge {
            what: "top_grad_bruteforce",
            estimate: g.n() as u128,
            cap: TGRAD_CAP as u128,
        });
    }
    let n = g.n();
    let mg = MaskGraph::new(g);
    let mut s = Search { mg: &mg, budget: Budget::new(budget), max_len: 2 * r + 1 };
    let mut best = TopGrad {
        r,
        value: Rational::from_integer(0),
        branch: if n > 0 { vec![0] } else { Vec::new() },
        paths: Vec::new(),
        nodes: 0,
    };
    let exhausted = |s: &Search, best: &TopGrad| Error::ResourceBest {
        what: "top_grad_bruteforce",
        nodes: s.budget.nodes,
        best: best.value,
    };
    for b in 2..=n {
        // even a clique on b branch vertices cannot beat the incumbent
        if Rational::new(b as i64 - 1, 2) <= best.value {
            continue;
        }
        for set in (0u128..1 << n).filter(|m| m.count_ones() as usize == b) {
            let members: Vec<Vertex> = bits(set).collect();
            let mut direct = Vec::new();
            let mut pairs = Vec::new();
            for (i, &x) in members.iter().enumerate() {
                for &y in &members[i + 1..] {
                    if mg.adj[x] & bit(y) != 0 {
                        direct.push(vec![x, y]);
                    } else if r > 0 {
                        let p = s.routes(x, y, mg.full() & !set).ok_or_else(|| exhausted(&s, &best))?;
                        if !p.options.is_empty() {
                            pairs.push(p);
                        }
                    }
                }
            }
            // need > best * b - direct to improve
            let target = best.value * Rational::from_integer(b as i64) - Rational::from_integer(direct.len() as i64);
            let need = (target.floor().to_integer() + 1).max(0) as usize;
            if need > pairs.len() {
                continue;
            }
            pairs.sort_by_key(|p| p.options.len());
            let refs: Vec<&Pair> = pairs.iter().collect();
            let (mut picks, mut need) = (None, need);
            s.pack(&refs, 0, &mut Vec::new(), &mut picks, &mut need).map_err(|_| exhausted(&s, &best))?;
            if let Some(picks) = picks {
                let mut paths = direct;
                paths.extend(picks.iter().zip(&pairs).filter(|(&c, _)| c != usize::MAX).map(|(&c, p)| p.options[c].1.clone()));
                let value = Rational::new(paths.len() as i64, b as i64);
                if value > best.value {
                    best = TopGrad { r, value, branch: members, paths, nodes: 0 };
                }
            }
        }
    }
    best.nodes = s.budget.nodes;
    Ok(best)
}

/// Both sides of `adm_r(G) <= 6r (∇̃_{r-1}(G))^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmBoundReport {
    pub r: usize,
    pub adm: usize,
    #[serde(serialize_with = "as_string")]
    pub tgrad: Rational,
    #[serde(serialize_with = "as_string")]
    pub bound: Rational,
    pub holds: bool,
    /// `bound - adm`; negative when the inequality fails.
    #[serde(serialize_with = "as_string")]
    pub slack: Rational,
    /// `∇̃_{r-1} < 1`, the regime in which the cubic bound can drop below the
    /// trivial value `adm_r >= 2` of any graph with an edge.
    pub degenerate: bool,
}

/// Computes both sides exactly. The inequality is reported, not enforced: it
/// fails on very sparse graphs (a single edge at `r = 1` has `adm_1 = 2`
/// against a bound of `3/4`).
pub fn check_adm_bound(g: &Graph, r: usize, cfg: &ExactConfig) -> Result<AdmBoundReport> {
    if r == 0 {
        return input("admissibility bound needs r >= 1");
    }
    let adm = adm_exact(g, r, cfg)?.value;
    let tgrad = top_grad_bruteforce(g, r - 1, cfg.node_budget)?.value;
    let bound = Rational::from_integer(6 * r as i64) * tgrad * tgrad * tgrad;
    let slack = bound - Rational::from_integer(adm as i64);
    Ok(AdmBoundReport {
        r,
        adm,
        tgrad,
        bound,
        holds: slack >= Rational::from_integer(0),
        slack,
        degenerate: tgrad < Rational::from_integer(1),
    })
}
