//! Tree decompositions, smoothing, and the root-first order whose weak
//! colouring numbers are bounded by `C(r + k, k)` for width `k`.

mod build;
mod pace;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::order::LinearOrder;
use crate::reach::eval_wcol;

pub use build::{decompose_exact, from_elimination_order, random_partial_ktree};
pub use pace::{parse_pace, read_pace, write_pace};

/// A rooted tree decomposition. Node `i` carries `bags[i]` (sorted, no
/// repeats); `edges` are the tree edges. `smooth` is a claim checked by
/// [`validate_td`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
    pub smooth: bool,
}

impl TreeDecomposition {
    /// Builds a decomposition rooted at node 0, sorting bags and computing the
    /// smoothness flag.
    pub fn new(mut bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        for b in bags.iter_mut() {
            b.sort_unstable();
            b.dedup();
        }
        let mut td = TreeDecomposition {
            bags,
            edges,
            root: 0,
            smooth: false,
        };
        td.smooth = td.is_smooth();
        td
    }

    pub fn with_root(mut self, root: usize) -> Self {
        self.root = root;
        self
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Whether adjacent bags differ by at most one vertex in each direction.
    pub fn is_smooth(&self) -> bool {
        self.edges.iter().all(|&(s, t)| {
            let (a, b) = (&self.bags[s], &self.bags[t]);
            a.len() - common(a, b) <= 1 && b.len() - common(a, b) <= 1
        })
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(s, t) in &self.edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        adj
    }

    /// Nodes in BFS order from the root together with each node's parent.
    fn bfs(&self) -> (Vec<usize>, Vec<Option<usize>>) {
        let adj = self.tree_adjacency();
        let mut parent = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        let mut order = Vec::with_capacity(self.len());
        if self.is_empty() {
            return (order, parent);
        }
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for &t in &adj[s] {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some(s);
                    queue.push_back(t);
                }
            }
        }
        (order, parent)
    }
}

fn common(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// Outcome of [`validate_td`]; `violation` names the first failed condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdReport {
    pub valid: bool,
    pub width: usize,
    pub bags: usize,
    pub smooth: bool,
    pub violation: Option<String>,
}

fn structural_violation(g: &Graph, td: &TreeDecomposition) -> Option<String> {
    let nb = td.len();
    if nb == 0 {
        return (g.n() > 0).then(|| "decomposition has no bags".into());
    }
    if td.root >= nb {
        return Some(format!("root {} is not a node", td.root));
    }
    for (i, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
            return Some(format!("bag {i} contains vertex {v} outside the graph"));
        }
        if bag.windows(2).any(|w| w[0] >= w[1]) {
            return Some(format!("bag {i} is not a sorted set"));
        }
    }
    if let Some(&(s, t)) = td.edges.iter().find(|&&(s, t)| s >= nb || t >= nb || s == t) {
        return Some(format!("tree edge {s}-{t} is not between two distinct nodes"));
    }
    if td.edges.len() != nb - 1 {
        return Some(format!("{} tree edges for {nb} nodes; not a tree", td.edges.len()));
    }
    if td.bfs().0.len() != nb {
        return Some("tree is disconnected".into());
    }
    let mut covered = vec![false; g.n()];
    td.bags.iter().flatten().for_each(|&v| covered[v] = true);
    if let Some(v) = covered.iter().position(|c| !c) {
        return Some(format!("vertex {v} is not in any bag"));
    }
    // Bags containing v form a subforest; it is connected iff it has one
    // edge fewer than nodes.
    let mut nodes = vec![0usize; g.n()];
    let mut links = vec![0usize; g.n()];
    td.bags.iter().flatten().for_each(|&v| nodes[v] += 1);
    for &(s, t) in &td.edges {
        for &v in &td.bags[s] {
            if td.bags[t].binary_search(&v).is_ok() {
                links[v] += 1;
            }
        }
    }
    if let Some(v) = g.vertices().find(|&v| links[v] + 1 != nodes[v]) {
        return Some(format!("bags containing vertex {v} are not connected in the tree"));
    }
    let mut home: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        bag.iter().for_each(|&v| home[v].push(i));
    }
    for (u, v) in g.edges() {
        if !home[u].iter().any(|i| td.bags[*i].binary_search(&v).is_ok()) {
            return Some(format!("edge {u}-{v} is not covered by any bag"));
        }
    }
    None
}

/// Removing a tree edge splits the nodes in two; the shared bag vertices must
/// separate the vertices seen only on one side from those seen only on the
/// other. Implied by the other conditions, so only sampled in debug builds.
fn separator_spot_check(g: &Graph, td: &TreeDecomposition) -> Option<String> {
    let stride = (td.edges.len() / 16).max(1);
    let adj = td.tree_adjacency();
    for &(s, t) in td.edges.iter().step_by(stride) {
        let mut side = vec![false; td.len()];
        let mut stack = vec![s];
        side[s] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !side[y] && !(x == s && y == t) {
                    side[y] = true;
                    stack.push(y);
                }
            }
        }
        let mut mark = vec![0u8; g.n()];
        for (i, bag) in td.bags.iter().enumerate() {
            bag.iter().for_each(|&v| mark[v] |= if side[i] { 1 } else { 2 });
        }
        let sep: Vec<bool> = g.vertices().map(|v| mark[v] == 3).collect();
        let reach = |v: Vertex| crate::graph::distances_within(g, v, |w| !sep[w]);
        if let Some(a) = g.vertices().find(|&v| mark[v] == 1) {
            let d = reach(a);
            if let Some(b) = g.vertices().find(|&v| mark[v] == 2 && d[v].is_some()) {
                return Some(format!("tree edge {s}-{t}: bags do not separate {a} from {b}"));
            }
        }
    }
    None
}

/// Checks the tree, vertex and edge coverage, the subtree condition and the
/// smoothness claim; reports the first violation.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> TdReport {
    let smooth = td.edges.iter().all(|&(s, t)| s < td.len() && t < td.len()) && td.is_smooth();
    let mut violation = structural_violation(g, td);
    if violation.is_none() && td.smooth != smooth {
        violation = Some(format!("smoothness flag is {} but decomposition is{} smooth", td.smooth, if smooth { "" } else { " not" }));
    }
    if violation.is_none() && cfg!(debug_assertions) {
        violation = separator_spot_check(g, td);
    }
    TdReport {
        valid: violation.is_none(),
        width: td.width(),
        bags: td.len(),
        smooth,
        violation,
    }
}

fn require_valid(g: &Graph, td: &TreeDecomposition) -> Result<()> {
    match structural_violation(g, td) {
        None => Ok(()),
        Some(v) => input(format!("invalid tree decomposition: {v}")),
    }
}

/// An equivalent smooth decomposition of the same width: adjacent equal bags
/// are merged, then every tree edge is replaced by a path of bags that drop
/// or gain one vertex at a time. The root keeps its bag.
pub fn make_smooth(g: &Graph, td: &TreeDecomposition) -> Result<TreeDecomposition> {
    require_valid(g, td)?;
    let cap = td.width() + 1;
    let (order, parent) = td.bfs();

    // Merge each node into its parent when the bags coincide.
    let mut rep: Vec<usize> = (0..td.len()).collect();
    for &s in &order {
        if let Some(p) = parent[s] {
            if td.bags[s] == td.bags[p] {
                rep[s] = rep[p];
            }
        }
    }
    let mut id = vec![usize::MAX; td.len()];
    let mut bags = Vec::new();
    for &s in &order {
        if rep[s] == s {
            id[s] = bags.len();
            bags.push(td.bags[s].clone());
        }
    }
    let mut edges = Vec::new();
    for &s in &order {
        let Some(p) = parent[s] else { continue };
        if rep[s] != s {
            continue;
        }
        let (from, to) = (id[rep[p]], id[s]);
        let target = &td.bags[s];
        let mut current = bags[from].clone();
        let mut last = from;
        loop {
            let drop = current.iter().position(|v| target.binary_search(v).is_err());
            let add = target.iter().find(|v| current.binary_search(v).is_err()).copied();
            let gap = |a: &[Vertex], b: &[Vertex]| a.len() - common(a, b);
            if gap(&current, target) <= 1 && gap(target, &current) <= 1 {
                break;
            }
            match (drop, add) {
                (None, None) => break,
                (_, Some(v)) if current.len() < cap || drop.is_none() => {
                    let at = current.binary_search(&v).unwrap_err();
                    current.insert(at, v);
                }
                (Some(i), _) => {
                    current.remove(i);
                }
                (None, Some(_)) => unreachable!(),
            }
            bags.push(current.clone());
            edges.push((last, bags.len() - 1));
            last = bags.len() - 1;
        }
        edges.push((last, to));
    }
    let out = TreeDecomposition {
        bags,
        edges,
        root: id[td.root],
        smooth: true,
    };
    debug_assert!(out.is_smooth() && out.width() == td.width());
    Ok(out)
}

/// Root-first order: vertices sorted by the BFS position of the first node
/// whose bag contains them, ties broken by vertex id.
pub fn td_order(g: &Graph, td: &TreeDecomposition) -> Result<LinearOrder> {
    require_valid(g, td)?;
    if !td.is_smooth() {
        return input("td_order needs a smooth decomposition");
    }
    let (order, _) = td.bfs();
    let mut first = vec![usize::MAX; g.n()];
    for (i, &s) in order.iter().enumerate() {
        for &v in &td.bags[s] {
            first[v] = first[v].min(i);
        }
    }
    let mut seq: Vec<Vertex> = g.vertices().collect();
    seq.sort_by_key(|&v| (first[v], v));
    LinearOrder::from_sequence(seq)
}

/// `C(n, k)` without overflow for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u128 {
    num_integer::binomial(n as u128, k as u128)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialCertificate {
    pub r: usize,
    pub width: usize,
    pub wcol: usize,
    pub bound: u128,
}

/// Evaluates the root-first order at radius `r` and checks it against
/// `C(r + k, k)`. A violation is a bug and surfaces as an invariant error.
pub fn binomial_certificate(g: &Graph, td: &TreeDecomposition, r: usize) -> Result<BinomialCertificate> {
    let order = td_order(g, td)?;
    let k = td.width();
    let wcol = eval_wcol(g, &order, r)?;
    let bound = binomial((r + k) as u64, k as u64);
    if wcol as u128 > bound {
        return Err(Error::Invariant(format!(
            "root-first order reaches {wcol} > C({}, {k}) = {bound} at radius {r}",
            r + k
        )));
    }
    Ok(BinomialCertificate { r, width: k, wcol, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path_td(n: usize) -> TreeDecomposition {
        let bags = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let edges = (1..n - 1).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, edges)
    }

    #[test]
    fn validation() {
        let r = validate_td(&path(6), &path_td(6));
        assert!(r.valid && r.width == 1 && r.smooth, "{r:?}");
        let mut broken = path_td(6);
        broken.bags[2] = vec![2];
        broken.smooth = broken.is_smooth();
        let r = validate_td(&path(6), &broken);
        assert_eq!(r.violation.as_deref(), Some("edge 2-3 is not covered by any bag"));
        let c4 = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]);
        let r = validate_td(&cycle(4), &c4);
        assert!(r.valid && r.width == 2);
        let mut liar = c4.clone();
        liar.bags[1] = vec![0, 2, 3];
        liar.smooth = false;
        assert!(validate_td(&cycle(4), &liar).violation.unwrap().contains("flag"));
        let split = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![0, 3]], vec![(0, 1), (1, 2)]);
        assert!(validate_td(&path(4), &split).violation.unwrap().contains("vertex 0"));
        let cyc = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2), (0, 2)]);
        assert!(!validate_td(&path(4), &cyc).valid);
    }

    #[test]
    fn smoothing() {
        let td = path_td(5);
        let s = make_smooth(&path(5), &td).unwrap();
        assert_eq!(s.bags, td.bags);
        let jump = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 3, 4]], vec![(0, 1)]);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!jump.smooth);
        let s = make_smooth(&g, &jump).unwrap();
        // drop 1, add 3; the last step to {0, 3, 4} is a single swap
        assert_eq!(s.len(), 4);
        assert!(validate_td(&g, &s).valid);
        assert_eq!(s.width(), 2);
        let dup = TreeDecomposition::new(vec![vec![0, 1], vec![0, 1], vec![1, 2]], vec![(0, 1), (1, 2)]);
        assert_eq!(make_smooth(&path(3), &dup).unwrap().len(), 2);
    }

    #[test]
    fn orders() {
        let star_td = TreeDecomposition::new((1..5).map(|i| vec![0, i]).collect(), (1..4).map(|i| (0, i)).collect());
        assert_eq!(td_order(&star(4), &star_td).unwrap().at(0), 0);
        assert_eq!(td_order(&path(5), &path_td(5)).unwrap().sequence(), &[0, 1, 2, 3, 4]);
        let jump = TreeDecomposition::new(vec![vec![0, 1], vec![2, 3]], vec![(0, 1)]);
        assert!(td_order(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(), &jump).is_err());
        let k5 = TreeDecomposition::new(vec![(0..5).collect()], vec![]);
        for r in 1..5 {
            let c = binomial_certificate(&clique(5), &k5, r).unwrap();
            assert_eq!(c.wcol, 5);
        }
    }

    #[test]
    fn partial_ktree_certificates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (g, td) = random_partial_ktree(40, 3, 0.7, &mut rng).unwrap();
        let c = binomial_certificate(&g, &td, 4).unwrap();
        assert!(c.wcol <= 35 && c.bound == 35);
        let (g, td) = random_partial_ktree(30, 2, 0.8, &mut rng).unwrap();
        assert!(binomial_certificate(&g, &td, 3).unwrap().wcol <= 10);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn smooth_orders_respect_binomial_bound(seed in any::<u64>(), n in 1usize..40, k in 1usize..4, r in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = n.max(k + 1);
            let (g, td) = random_partial_ktree(n, k, 0.6, &mut rng).unwrap();
            prop_assert!(validate_td(&g, &td).valid);
            let c = binomial_certificate(&g, &td, r).unwrap();
            prop_assert!(c.wcol as u128 <= binomial((r + k) as u64, k as u64));
        }

        #[test]
        fn smoothing_preserves_width(seed in any::<u64>(), n in 1usize..10) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = crate::graph::random::gnp(n, 0.4, &mut rng);
            let td = decompose_exact(&g, &Default::default()).unwrap();
            prop_assert!(validate_td(&g, &td).valid);
            let s = make_smooth(&g, &td).unwrap();
            let rep = validate_td(&g, &s);
            prop_assert!(rep.valid && rep.smooth, "{:?}", rep);
            prop_assert_eq!(s.width(), td.width());
            prop_assert_eq!(td.width(), crate::exact::treewidth_small(&g, &Default::default()).unwrap());
        }

        #[test]
        fn trees_need_r_plus_one(seed in any::<u64>(), n in 2usize..30, r in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (g, td) = random_partial_ktree(n, 1, 1.0, &mut rng).unwrap();
            prop_assert!(binomial_certificate(&g, &td, r).unwrap().wcol <= r + 1);
        }
    }
}
