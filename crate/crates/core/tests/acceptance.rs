//! End-to-end acceptance checks. Each test prints one PASS/FAIL line to
//! stderr (bypassing output capture) and fails when its criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use gencol::cover::{build_cover, girth_degree_floor, project_cover, validate_cover};
use gencol::exact::{adm_exact, col_exact, degeneracy, treedepth_small, treewidth_small, wcol_exact, ExactConfig};
use gencol::experiments::{adm_bound_sweep, cauchy_check, ceil, girth_lb, sample_orders};
use gencol::extremal::gen_gkr;
use gencol::graph::named::{heawood, mcgee, petersen, robertson};
use gencol::graph::random::{bipartite_gnp, gnp};
use gencol::graph::{is_connected, subdivide};
use gencol::heuristics::{heuristic_order, HEURISTICS};
use gencol::reach::eval_wcol;
use gencol::reduction::verify_reduction;
use gencol::td::{binomial, binomial_certificate, make_smooth, random_partial_ktree, td_order};
use gencol::{BipartiteGraph, Graph, Rational};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u8, title: &str, start: Instant, limit: Duration, ok: bool, detail: String) {
    let elapsed = start.elapsed();
    let pass = ok && elapsed <= limit;
    let line = format!(
        "criterion {id:>2} {} | {title} | {detail} | {elapsed:.2?} (limit {limit:?})",
        if pass { "PASS" } else { "FAIL" }
    );
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(pass, "{line}");
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const MIN: Duration = Duration::from_secs(60);

#[test]
fn criterion_01_binomial_certificate() {
    let start = Instant::now();
    let mut rng = rng(1);
    let (mut checks, mut worst) = (0, String::new());
    let mut ok = true;
    for i in 0..50 {
        let k = 1 + i % 3;
        let n = rng.random_range(k + 1..=60);
        let p = rng.random_range(0.3..=1.0);
        let (g, td) = random_partial_ktree(n, k, p, &mut rng).unwrap();
        let order = td_order(&g, &td).unwrap();
        for r in 1..=5 {
            let w = eval_wcol(&g, &order, r).unwrap();
            let bound = binomial((r + k) as u64, k as u64);
            checks += 1;
            if w as u128 > bound {
                ok = false;
                worst = format!("n={n} k={k} r={r}: {w} > {bound}");
            }
        }
    }
    report(1, "binomial certificate on partial k-trees", start, MIN, ok, format!("{checks} checks {worst}"));
}

#[test]
fn criterion_02_extremal_tightness() {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for r in 1..=3 {
        let g = gen_gkr(1, r).unwrap().graph;
        let cfg = ExactConfig::with_cap(g.n());
        for rr in 1..=r {
            let w = wcol_exact(&g, rr, &cfg).unwrap().value;
            ok &= w == rr + 1 && w as u128 == binomial(rr as u64 + 1, 1);
            seen.push(format!("G(1,{r}) wcol_{rr}={w}"));
        }
    }
    let g21 = gen_gkr(2, 1).unwrap().graph;
    let w = wcol_exact(&g21, 1, &ExactConfig::with_cap(g21.n())).unwrap().value;
    ok &= w == 3 && w as u128 == binomial(3, 2);
    seen.push(format!("G(2,1) wcol_1={w}"));
    let inst = gen_gkr(2, 2).unwrap();
    let smooth = make_smooth(&inst.graph, &inst.td).unwrap();
    let cert = binomial_certificate(&inst.graph, &smooth, 2).unwrap();
    ok &= cert.wcol == 6 && cert.bound == 6;
    seen.push(format!("G(2,2) n={} order bound {}", inst.graph.n(), cert.wcol));
    report(2, "extremal family tightness", start, 2 * MIN, ok, seen.join(", "));
}

#[test]
fn criterion_03_gap_corollary() {
    let start = Instant::now();
    let g = gen_gkr(1, 2).unwrap().graph;
    let cfg = ExactConfig::with_cap(g.n());
    let mut ok = true;
    let mut seen = Vec::new();
    for rr in 1..=2usize {
        let col = col_exact(&g, rr, &cfg).unwrap().value;
        let wcol = wcol_exact(&g, rr, &cfg).unwrap().value;
        // wcol >= (col / r')^r'
        let lhs = Rational::from_integer(wcol as i64);
        let rhs = (0..rr).fold(Rational::from_integer(1), |acc, _| acc * Rational::new(col as i64, rr as i64));
        ok &= col == 2 && lhs >= rhs;
        seen.push(format!("r'={rr}: col={col} wcol={wcol} (col/r')^r'={rhs}"));
    }
    report(3, "colouring gap on G(1,2)", start, MIN, ok, seen.join(", "));
}

#[test]
fn criterion_04_chain_and_closure() {
    let start = Instant::now();
    let mut rng = rng(4);
    let cfg = ExactConfig::default();
    let mut bad = Vec::new();
    for i in 0..200 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.1..0.9);
        let g = gnp(n, p, &mut rng);
        let wcol = |r| wcol_exact(&g, r, &cfg).unwrap().value;
        let col = |r| col_exact(&g, r, &cfg).unwrap().value;
        for r in 1..=3u32 {
            let (a, c, w) = (adm_exact(&g, r as usize, &cfg).unwrap().value, col(r as usize), wcol(r as usize));
            if !(a <= c && c <= w && w <= a.pow(r)) {
                bad.push(format!("#{i} r={r}: adm={a} col={c} wcol={w}"));
            }
        }
        let (tw, td) = (treewidth_small(&g, &cfg).unwrap(), treedepth_small(&g, &cfg).unwrap());
        if col(n) != tw + 1 || wcol(n) != td || wcol(1) != degeneracy(&g) + 1 {
            bad.push(format!("#{i}: closure identity fails"));
        }
    }
    report(4, "chain and closure identities", start, 10 * MIN, bad.is_empty(), format!("200 graphs, {} violations {}", bad.len(), bad.join("; ")));
}

#[test]
fn criterion_05_regular_girth_weak_bound() {
    let start = Instant::now();
    let g = robertson();
    let two = girth_lb(&g, 2, 1000, 5).unwrap();
    let one = girth_lb(&g, 1, 1000, 5).unwrap();
    let equal = one.orders.iter().all(|o| o.value == Rational::from_integer(2));
    let ok = two.all_hold() && two.orders[0].bound == Rational::from_integer(5) && one.all_hold() && equal;
    report(
        5,
        "Robertson weak-reach averages",
        start,
        MIN,
        ok,
        format!(
            "{} orders; min W_2 = {} >= 5; W_1 = 2 on every order: {equal}",
            two.orders.len(),
            two.min_value().unwrap()
        ),
    );
}

#[test]
fn criterion_06_cauchy_inequality() {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (name, g) in [("Petersen", petersen()), ("McGee", mcgee())] {
        let rep = cauchy_check(&g, 1, 1000, 6).unwrap();
        ok &= rep.all_hold();
        seen.push(format!("{name}: {} orders, min slack {}", rep.orders.len(), rep.min_slack().unwrap()));
    }
    report(6, "strong-reach Cauchy-Schwarz step", start, MIN, ok, seen.join(", "));
}

#[test]
fn criterion_07_cover_guarantees() {
    let start = Instant::now();
    let mut rng = rng(7);
    let mut bad = Vec::new();
    let mut covers = 0;
    for i in 0..100 {
        let n = rng.random_range(2..=30);
        let p = rng.random_range(0.05..0.3);
        let g = gnp(n, p, &mut rng);
        let r = 1 + i % 2;
        for name in HEURISTICS {
            let o = heuristic_order(&g, name, r).unwrap();
            let rep = validate_cover(&g, &build_cover(&g, &o, r).unwrap(), r);
            let w = eval_wcol(&g, &o, 2 * r).unwrap();
            covers += 1;
            if !rep.is_cover || rep.max_radius.unwrap() > 2 * r || rep.max_center_eccentricity.unwrap() > 2 * r || rep.max_degree > w {
                bad.push(format!("#{i} {name}: {rep:?} wcol={w}"));
            }
        }
    }
    let cfg = ExactConfig::default();
    let mut tight = 0;
    for i in 0..30 {
        let n = rng.random_range(3..=9);
        let g = gnp(n, 0.35, &mut rng);
        let r = 1 + i % 2;
        let ex = wcol_exact(&g, 2 * r, &cfg).unwrap();
        let rep = validate_cover(&g, &build_cover(&g, &ex.order, r).unwrap(), r);
        covers += 1;
        tight += usize::from(rep.max_degree == ex.value);
        if !rep.is_cover || rep.max_radius.unwrap() > 2 * r || rep.max_degree > ex.value {
            bad.push(format!("exact #{i}: {rep:?} wcol={}", ex.value));
        }
    }
    report(
        7,
        "cover radius and degree",
        start,
        5 * MIN,
        bad.is_empty(),
        format!("{covers} covers, {tight}/30 exact covers meet wcol_2r, violations: {}", bad.join("; ")),
    );
}

/// Projects covers built on the subdivision with the given radius and
/// checks them as `r`-covers of Petersen.
fn projection_failures(s: usize, r: usize, radius: usize) -> (usize, usize) {
    let h = petersen();
    let gs = subdivide(&h, s);
    let (mut fails, mut total) = (0, 0);
    for (_, o) in sample_orders(&gs, 20, 8, radius).unwrap() {
        let cover = build_cover(&gs, &o, radius).unwrap();
        let before = validate_cover(&gs, &cover, radius);
        let proj = project_cover(&gs, &h, s, &cover).unwrap();
        let after = validate_cover(&h, &proj, r);
        total += 1;
        if !(before.is_cover && after.is_cover && after.max_degree <= before.max_degree) {
            fails += 1;
        }
    }
    (fails, total)
}

#[test]
fn criterion_08_projection() {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for s in 1..=2 {
        for r in 1..=2 {
            let (fails, total) = projection_failures(s, r, r * s);
            ok &= fails == 0;
            let (alt, _) = projection_failures(s, r, r * (s + 1));
            seen.push(format!("s={s} r={r}: radius r*s fails {fails}/{total} (radius r*(s+1) fails {alt}/{total})"));
        }
    }
    report(8, "cover projection through subdivisions", start, MIN, ok, seen.join(", "));
}

#[test]
fn criterion_09_girth_degree_floor() {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (name, g) in [("Petersen", petersen()), ("Heawood", heawood())] {
        let floor = ceil(girth_degree_floor(&g, 4).unwrap()) as usize;
        ok &= floor == 2;
        let mut min_degree = usize::MAX;
        let mut built = 0;
        for r in 1..=2 {
            for (_, o) in sample_orders(&g, 250, 9, r).unwrap() {
                let rep = validate_cover(&g, &build_cover(&g, &o, r).unwrap(), 1);
                if rep.is_cover && rep.max_radius.unwrap() <= 4 {
                    built += 1;
                    min_degree = min_degree.min(rep.max_degree);
                }
            }
        }
        ok &= built >= 500 && min_degree >= floor;
        seen.push(format!("{name}: {built} covers, min degree {min_degree} >= {floor}"));
    }
    report(9, "girth degree floor", start, MIN, ok, seen.join(", "));
}

/// Connected bipartite graphs on `n` vertices, one per isomorphism class,
/// found by canonising biadjacency matrices under row/column permutations.
fn connected_bipartite(n: usize) -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let encode = |m: u64, rows: &[usize], cols: &[usize]| {
            let mut code = 0u64;
            for (i, &x) in rows.iter().enumerate() {
                for (j, &y) in cols.iter().enumerate() {
                    if m >> (x * b + y) & 1 == 1 {
                        code |= 1 << (i * b + j);
                    }
                }
            }
            code
        };
        let row_perms: Vec<Vec<usize>> = (0..a).permutations(a).collect();
        let col_perms: Vec<Vec<usize>> = (0..b).permutations(b).collect();
        let transpose = |m: u64| {
            let mut t = 0u64;
            for i in 0..a {
                for j in 0..b {
                    if m >> (i * b + j) & 1 == 1 {
                        t |= 1 << (j * a + i);
                    }
                }
            }
            t
        };
        let mut classes = std::collections::BTreeSet::new();
        for m in 0u64..1 << (a * b) {
            let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).filter(|&(i, j)| m >> (i * b + j) & 1 == 1);
            let g = Graph::from_edges(n, edges.map(|(i, j)| (i, a + j))).unwrap();
            if !is_connected(&g) {
                continue;
            }
            let mut forms = vec![m];
            if a == b {
                forms.push(transpose(m));
            }
            let mut canon = u64::MAX;
            for &f in &forms {
                for rp in &row_perms {
                    for cp in &col_perms {
                        canon = canon.min(encode(f, rp, cp));
                    }
                }
            }
            if classes.insert(canon) {
                let side = (0..n).map(|v| if v < a { 1 } else { 2 }).collect();
                out.push(BipartiteGraph::new(g, side).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_10_hardness_equivalence() {
    let start = Instant::now();
    let cfg = ExactConfig::default();
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    let mut instances = 0;
    let mut check = |bg: &BipartiteGraph, label: String, instances: &mut usize| {
        let k_max = bg.part(1).len().min(bg.part(2).len());
        for k in 1..=k_max {
            let rep = verify_reduction(bg, k, &cfg).unwrap();
            *instances += 1;
            if !rep.holds() {
                bad.push(format!("{label} k={k}: {rep:?}"));
            }
        }
    };
    for n in 2..=7 {
        let family = connected_bipartite(n);
        counts.push(family.len());
        for (i, bg) in family.iter().enumerate() {
            check(bg, format!("n={n} #{i}"), &mut instances);
        }
    }
    let mut rng = rng(10);
    for i in 0..100 {
        let a = rng.random_range(1..=5);
        let b = rng.random_range(1..=10 - a);
        let p = rng.random_range(0.2..0.9);
        check(&bipartite_gnp(a, b, p, &mut rng), format!("random #{i}"), &mut instances);
    }
    // unlabelled connected bipartite graphs on 2..=7 vertices
    let ok = bad.is_empty() && counts == [1, 1, 3, 5, 17, 44];
    report(
        10,
        "biclique reduction equivalence",
        start,
        10 * MIN,
        ok,
        format!("class counts {counts:?}, {instances} (graph, k) instances, violations: {}", bad.join("; ")),
    );
}

#[test]
fn criterion_11_admissibility_bound() {
    let start = Instant::now();
    let rows = adm_bound_sweep(100, 5..=8, 0.5, &[1, 2], 11, &ExactConfig::default()).unwrap();
    let failing: Vec<String> = rows
        .iter()
        .filter(|row| !row.report.holds)
        .map(|row| format!("#{} n={} m={} r={} adm={} tgrad={}", row.index, row.n, row.m, row.report.r, row.report.adm, row.report.tgrad))
        .collect();
    let min_slack = rows.iter().map(|row| row.report.slack).min().unwrap();
    report(
        11,
        "admissibility versus topological grad",
        start,
        10 * MIN,
        failing.is_empty(),
        format!("{} checks, min slack {min_slack}, failures: {}", rows.len(), failing.join("; ")),
    );
}
