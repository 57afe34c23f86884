//! Neighbourhood covers built from weak reachability, their validation, and
//! projection through subdivisions.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::io::content_lines;
use crate::graph::{distances_within, girth, subdivide, Graph, Vertex};
use crate::order::LinearOrder;
use crate::reach::for_each_weak;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub center: Vertex,
    /// Sorted.
    pub vertices: Vec<Vertex>,
}

/// A family of clusters meant to contain every `r`-ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub r: usize,
    pub clusters: Vec<Cluster>,
}

/// Cluster `X_w` holds every `u` that weakly `2r`-reaches `w`, i.e. the
/// `2r`-ball around `w` in the subgraph of vertices not smaller than `w`.
/// For every `v`, the cluster of the smallest vertex of `N_r(v)` contains
/// `N_r(v)`, and `u` lies in exactly `|WReach_2r[u]|` clusters.
pub fn build_cover(g: &Graph, order: &LinearOrder, r: usize) -> Result<Cover> {
    if r == 0 {
        return input("cover radius must be at least 1");
    }
    order.check_len(g.n())?;
    let mut members = vec![Vec::new(); g.n()];
    for_each_weak(g, order, 2 * r, |v, w, _| members[w].push(v));
    let clusters = members
        .into_iter()
        .enumerate()
        .map(|(center, mut vertices)| {
            vertices.sort_unstable();
            Cluster { center, vertices }
        })
        .collect();
    let cover = Cover { r, clusters };
    debug_assert!({
        let rep = validate_cover(g, &cover, r);
        rep.is_cover && rep.max_center_eccentricity.unwrap_or(0) <= 2 * r
    });
    Ok(cover)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub is_cover: bool,
    pub clusters: usize,
    /// Largest cluster radius, measured inside the cluster.
    pub max_radius: Option<usize>,
    /// Largest eccentricity of a recorded centre inside its cluster.
    pub max_center_eccentricity: Option<usize>,
    pub max_degree: usize,
    pub violation: Option<String>,
}

fn note(slot: &mut Option<String>, msg: String) {
    slot.get_or_insert(msg);
}

fn eccentricity_within(g: &Graph, inside: &[bool], v: Vertex, size: usize) -> Option<usize> {
    let d = distances_within(g, v, |w| inside[w]);
    let reached: Vec<usize> = d.iter().flatten().copied().collect();
    (reached.len() == size).then(|| reached.into_iter().max().unwrap_or(0))
}

/// Checks cluster connectivity, computes radii inside clusters and verifies
/// that every `N_r(v)` lies in some cluster.
pub fn validate_cover(g: &Graph, cover: &Cover, r: usize) -> CoverReport {
    let n = g.n();
    let mut violation = None;
    let mut degree = vec![0usize; n];
    let mut max_radius = None;
    let mut max_center = None;
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cover.clusters.iter().enumerate() {
        if c.vertices.is_empty() {
            note(&mut violation, format!("cluster {i} is empty"));
            continue;
        }
        if let Some(&v) = c.vertices.iter().find(|&&v| v >= n) {
            note(&mut violation, format!("cluster {i} contains vertex {v} outside the graph"));
            continue;
        }
        let mut inside = vec![false; n];
        c.vertices.iter().for_each(|&v| inside[v] = true);
        let size = inside.iter().filter(|&&b| b).count();
        if size != c.vertices.len() {
            note(&mut violation, format!("cluster {i} repeats a vertex"));
        }
        for &v in &c.vertices {
            degree[v] += 1;
            member_of[v].push(i);
        }
        let radius = c.vertices.iter().filter_map(|&v| eccentricity_within(g, &inside, v, size)).min();
        match radius {
            None => note(&mut violation, format!("cluster {i} is not connected")),
            Some(rad) => {
                max_radius = max_radius.max(Some(rad));
                if c.center < n && inside[c.center] {
                    max_center = max_center.max(eccentricity_within(g, &inside, c.center, size));
                } else {
                    note(&mut violation, format!("centre {} of cluster {i} is not in the cluster", c.center));
                }
            }
        }
    }
    if violation.is_none() {
        for v in g.vertices() {
            let ball = crate::graph::ball_unchecked(g, v, r);
            let ok = member_of[v].iter().any(|&i| {
                let vs = &cover.clusters[i].vertices;
                ball.iter().all(|u| vs.contains(u))
            });
            if !ok {
                violation = Some(format!("no cluster contains N_{r}({v})"));
                break;
            }
        }
    }
    CoverReport {
        is_cover: violation.is_none(),
        clusters: cover.clusters.len(),
        max_radius,
        max_center_eccentricity: max_center,
        max_degree: degree.into_iter().max().unwrap_or(0),
        violation,
    }
}

/// Restricts every cluster of a cover of `subdivide(h, s)` to the branch
/// vertices `0..h.n()`. Clusters left empty are dropped; a centre on a
/// subdivision path moves to the nearest branch vertex of its cluster
/// (smallest id on ties). The result keeps `cover.r`; the caller decides the
/// radius it is validated against.
pub fn project_cover(g_sub: &Graph, h: &Graph, s: usize, cover: &Cover) -> Result<Cover> {
    if *g_sub != subdivide(h, s) {
        return input(format!("graph is not the {s}-subdivision of the given graph"));
    }
    let nh = h.n();
    let mut clusters = Vec::new();
    for c in &cover.clusters {
        let kept: Vec<Vertex> = c.vertices.iter().copied().filter(|&v| v < nh).collect();
        if kept.is_empty() {
            continue;
        }
        let center = if c.center < nh {
            c.center
        } else {
            let mut inside = vec![false; g_sub.n()];
            c.vertices.iter().for_each(|&v| inside[v] = true);
            let d = distances_within(g_sub, c.center, |w| inside[w]);
            *kept
                .iter()
                .filter(|&&v| d[v].is_some())
                .min_by_key(|&&v| (d[v], v))
                .unwrap_or(&kept[0])
        };
        clusters.push(Cluster { center, vertices: kept });
    }
    Ok(Cover { r: cover.r, clusters })
}

/// Edge density `|E| / |V|`: a lower bound on the degree of every
/// 1-neighbourhood cover of radius at most `k`, valid when the girth is at
/// least `k + 1`.
pub fn girth_degree_floor(g: &Graph, k: usize) -> Result<Rational> {
    if k < 2 {
        return input("radius bound k must be at least 2");
    }
    if let Some(gi) = girth(g) {
        if gi < k + 1 {
            return input(format!("girth {gi} is below k + 1 = {}", k + 1));
        }
    }
    crate::graph::edge_density(g)
}

/// Cover file: one line per cluster, `center: v1 v2 ...`.
pub fn write_cover(cover: &Cover) -> String {
    let mut out = String::new();
    for c in &cover.clusters {
        let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}: {}", c.center, vs.join(" ")).unwrap();
    }
    out
}

pub fn parse_cover(text: &str, r: usize) -> Result<Cover> {
    let mut clusters = Vec::new();
    for (line, l) in content_lines(text, "#") {
        let bad = |msg: String| Error::Parse { line, msg };
        let (head, rest) = l.split_once(':').ok_or_else(|| bad("expected 'center: v1 v2 ...'".into()))?;
        let center = head.trim().parse().map_err(|_| bad(format!("bad centre '{}'", head.trim())))?;
        let mut vertices = rest
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad vertex '{t}'"))))
            .collect::<Result<Vec<Vertex>>>()?;
        vertices.sort_unstable();
        clusters.push(Cluster { center, vertices });
    }
    Ok(Cover { r, clusters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{radius, random::gnp};
    use crate::reach::{eval_wcol, wreach_all};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn star_cover() {
        let g = star(4);
        let o = LinearOrder::identity(5);
        let c = build_cover(&g, &o, 1).unwrap();
        assert_eq!(c.clusters[0].vertices, vec![0, 1, 2, 3, 4]);
        assert!(c.clusters[1..].iter().all(|x| x.vertices.len() == 1));
        let rep = validate_cover(&g, &c, 1);
        assert!(rep.is_cover);
        assert_eq!(rep.max_degree, 2);
        assert_eq!(rep.max_degree, eval_wcol(&g, &o, 2).unwrap());
    }

    #[test]
    fn clique_and_path_covers() {
        let k = clique(5);
        let o = LinearOrder::random(5, &mut ChaCha8Rng::seed_from_u64(2));
        let c = build_cover(&k, &o, 2).unwrap();
        assert_eq!(c.clusters[o.at(0)].vertices.len(), 5);
        assert_eq!(validate_cover(&k, &c, 2).max_degree, 5);
        let p = path(7);
        let rep = validate_cover(&p, &build_cover(&p, &LinearOrder::identity(7), 1).unwrap(), 1);
        assert!(rep.is_cover && rep.max_radius.unwrap() <= 2);
        assert!(build_cover(&p, &LinearOrder::identity(7), 0).is_err());
    }

    #[test]
    fn trivial_and_broken_covers() {
        let g = petersen();
        let all = Cover { r: 1, clusters: vec![Cluster { center: 0, vertices: (0..10).collect() }] };
        let rep = validate_cover(&g, &all, 1);
        assert!(rep.is_cover);
        assert_eq!((rep.max_degree, rep.max_radius), (1, radius(&g)));
        let singles = Cover { r: 1, clusters: (0..10).map(|v| Cluster { center: v, vertices: vec![v] }).collect() };
        assert!(!validate_cover(&g, &singles, 1).is_cover);
        let split = Cover { r: 0, clusters: vec![Cluster { center: 0, vertices: vec![0, 7] }] };
        assert!(validate_cover(&g, &split, 0).violation.unwrap().contains("not connected"));
    }

    #[test]
    fn projection() {
        let h = cycle(4);
        let whole = Cover { r: 1, clusters: vec![Cluster { center: 5, vertices: (0..8).collect() }] };
        let p = project_cover(&subdivide(&h, 1), &h, 1, &whole).unwrap();
        assert_eq!(p.clusters[0].vertices, vec![0, 1, 2, 3]);
        assert!(p.clusters[0].center < 4);
        assert!(validate_cover(&h, &p, 1).is_cover);
        let c = build_cover(&h, &LinearOrder::identity(4), 1).unwrap();
        assert_eq!(project_cover(&h, &h, 0, &c).unwrap(), c);
        assert!(project_cover(&h, &h, 1, &c).is_err());
    }

    #[test]
    fn density_floors() {
        assert_eq!(girth_degree_floor(&petersen(), 4).unwrap(), Rational::new(3, 2));
        assert_eq!(girth_degree_floor(&heawood(), 5).unwrap(), Rational::new(3, 2));
        assert_eq!(girth_degree_floor(&cycle(9), 8).unwrap(), Rational::from_integer(1));
        assert!(girth_degree_floor(&petersen(), 5).is_err());
    }

    #[test]
    fn file_round_trip() {
        let g = petersen();
        let c = build_cover(&g, &LinearOrder::identity(10), 1).unwrap();
        assert_eq!(parse_cover(&write_cover(&c), 1).unwrap(), c);
        assert!(parse_cover("0 1 2\n", 1).is_err());
        assert!(parse_cover("0: 1 x\n", 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn built_covers_meet_their_guarantees(seed in any::<u64>(), n in 1usize..20, r in 1usize..3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = gnp(n, 0.25, &mut rng);
            let o = LinearOrder::random(n, &mut rng);
            let c = build_cover(&g, &o, r).unwrap();
            let rep = validate_cover(&g, &c, r);
            prop_assert!(rep.is_cover, "{:?}", rep);
            prop_assert!(rep.max_center_eccentricity.unwrap() <= 2 * r);
            let sets = wreach_all(&g, &o, 2 * r).unwrap();
            prop_assert_eq!(rep.max_degree, sets.iter().map(Vec::len).max().unwrap());
        }
    }
}
