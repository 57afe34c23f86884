//! Named graphs: small parametric families and a catalogue of cages embedded
//! as literal edge lists.

use super::{girth, Graph, Vertex};
use crate::error::{input, Result};

/// The complete graph `K_n`.
pub fn clique(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges_merged(n, edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edges_merged(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_merged(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_merged(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges_merged(a + b, edges)
}

/// A cage from the built-in catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cage {
    pub name: &'static str,
    pub n: usize,
    pub degree: usize,
    pub girth: usize,
    edges: &'static [(Vertex, Vertex)],
}

impl Cage {
    pub fn graph(&self) -> Graph {
        let g = Graph::from_edges_merged(self.n, self.edges.iter().copied());
        debug_assert_eq!(g.regular_degree(), Some(self.degree), "{} regularity", self.name);
        debug_assert_eq!(girth(&g), Some(self.girth), "{} girth", self.name);
        g
    }
}

pub const CAGES: &[Cage] = &[
    Cage { name: "petersen", n: 10, degree: 3, girth: 5, edges: PETERSEN_EDGES },
    Cage { name: "heawood", n: 14, degree: 3, girth: 6, edges: HEAWOOD_EDGES },
    Cage { name: "mcgee", n: 24, degree: 3, girth: 7, edges: MCGEE_EDGES },
    Cage { name: "robertson", n: 19, degree: 4, girth: 5, edges: ROBERTSON_EDGES },
    Cage { name: "tutte_coxeter", n: 30, degree: 3, girth: 8, edges: TUTTE_COXETER_EDGES },
    Cage { name: "levi_pg23", n: 26, degree: 4, girth: 6, edges: LEVI_PG23_EDGES },
];

pub fn cage(name: &str) -> Option<&'static Cage> {
    CAGES.iter().find(|c| c.name == name)
}

pub fn petersen() -> Graph {
    CAGES[0].graph()
}

pub fn heawood() -> Graph {
    CAGES[1].graph()
}

pub fn mcgee() -> Graph {
    CAGES[2].graph()
}

pub fn robertson() -> Graph {
    CAGES[3].graph()
}

/// Resolves names such as `petersen`, `clique(5)` or `complete_bipartite(2,3)`.
///
/// Parametric families: `clique(n)`, `cycle(n)`, `path(n)`, `star(leaves)`,
/// `complete_bipartite(a,b)` and `empty(n)`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    if let Some(c) = cage(name) {
        return Ok(c.graph());
    }
    let (family, args) = match name.split_once('(') {
        Some((f, rest)) if rest.ends_with(')') => (f.trim(), &rest[..rest.len() - 1]),
        _ => return input(format!("unknown graph name '{name}'")),
    };
    let args: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| crate::Error::Input(format!("bad argument in '{name}': {e}")))?;
    match (family, args.as_slice()) {
        ("clique", &[n]) => Ok(clique(n)),
        ("cycle", &[n]) if n >= 3 => Ok(cycle(n)),
        ("cycle", _) => input("cycle(n) needs n >= 3"),
        ("path", &[n]) => Ok(path(n)),
        ("star", &[k]) => Ok(star(k)),
        ("complete_bipartite", &[a, b]) => Ok(complete_bipartite(a, b)),
        ("empty", &[n]) => Ok(Graph::empty(n)),
        _ => input(format!("unknown graph name '{name}'")),
    }
}

const PETERSEN_EDGES: &[(Vertex, Vertex)] = &[
    (0,1), (0,4), (0,5), (1,2), (1,6), (2,3), (2,7), (3,4), (3,8), (4,9), (5,7), (5,8),
    (6,8), (6,9), (7,9),
];

const HEAWOOD_EDGES: &[(Vertex, Vertex)] = &[
    (0,1), (0,5), (0,13), (1,2), (1,10), (2,3), (2,7), (3,4), (3,12), (4,5), (4,9), (5,6),
    (6,7), (6,11), (7,8), (8,9), (8,13), (9,10), (10,11), (11,12), (12,13),
];

const MCGEE_EDGES: &[(Vertex, Vertex)] = &[
    (0,1), (0,12), (0,23), (1,2), (1,8), (2,3), (2,19), (3,4), (3,15), (4,5), (4,11), (5,6),
    (5,22), (6,7), (6,18), (7,8), (7,14), (8,9), (9,10), (9,21), (10,11), (10,17), (11,12),
    (12,13), (13,14), (13,20), (14,15), (15,16), (16,17), (16,23), (17,18), (18,19),
    (19,20), (20,21), (21,22), (22,23),
];

const ROBERTSON_EDGES: &[(Vertex, Vertex)] = &[
    (0,1), (0,8), (0,12), (0,18), (1,2), (1,5), (1,16), (2,3), (2,9), (2,13), (3,4), (3,7),
    (3,18), (4,5), (4,12), (4,15), (5,6), (5,10), (6,7), (6,13), (6,17), (7,8), (7,11),
    (8,9), (8,15), (9,10), (9,17), (10,11), (10,14), (11,12), (11,16), (12,13), (13,14),
    (14,15), (14,18), (15,16), (16,17), (17,18),
];

const TUTTE_COXETER_EDGES: &[(Vertex, Vertex)] = &[
    (0,1), (0,17), (0,29), (1,2), (1,22), (2,3), (2,9), (3,4), (3,26), (4,5), (4,13), (5,6),
    (5,18), (6,7), (6,23), (7,8), (7,28), (8,9), (8,15), (9,10), (10,11), (10,19), (11,12),
    (11,24), (12,13), (12,29), (13,14), (14,15), (14,21), (15,16), (16,17), (16,25),
    (17,18), (18,19), (19,20), (20,21), (20,27), (21,22), (22,23), (23,24), (24,25),
    (25,26), (26,27), (27,28), (28,29),
];

const LEVI_PG23_EDGES: &[(Vertex, Vertex)] = &[
    (0,14), (0,17), (0,20), (0,23), (1,13), (1,17), (1,18), (1,19), (2,16), (2,17), (2,22),
    (2,24), (3,15), (3,17), (3,21), (3,25), (4,13), (4,14), (4,15), (4,16), (5,14), (5,19),
    (5,22), (5,25), (6,14), (6,18), (6,21), (6,24), (7,13), (7,23), (7,24), (7,25), (8,16),
    (8,19), (8,21), (8,23), (9,15), (9,18), (9,22), (9,23), (10,13), (10,20), (10,21),
    (10,22), (11,15), (11,19), (11,20), (11,24), (12,16), (12,18), (12,20), (12,25),
];
