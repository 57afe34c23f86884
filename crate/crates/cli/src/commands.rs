use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use gencol::cover::{build_cover, parse_cover, project_cover, validate_cover, write_cover};
use gencol::exact::{adm_exact, col_exact, wcol_exact, Exact, ExactConfig};
use gencol::expansion::{top_grad_bruteforce, TGRAD_CAP};
use gencol::experiments::{adm_bound_sweep, cauchy_check, girth_lb, SampleReport};
use gencol::extremal::gen_gkr_capped;
use gencol::graph::io::{parse_edge_list, write_edge_list};
use gencol::graph::named::named_graph;
use gencol::graph::{complement, subdivide};
use gencol::heuristics::{degeneracy_order, heuristic_order};
use gencol::reach::{eval_adm, eval_col, eval_wcol};
use gencol::reduction::{bcbs_to_wcol, verify_reduction};
use gencol::td::{binomial_certificate, make_smooth, parse_pace, td_order, validate_td, write_pace, TreeDecomposition};
use gencol::{BipartiteGraph, Graph, LinearOrder};

use crate::report::{Inputs, Report, Table};
use crate::{Command, CoverCommand, ExpCommand, GenCommand, Global, Measure, OrderSource, ReduceCommand, TdCommand};

struct Ctx<'a> {
    g: &'a Global,
    inputs: &'a mut Inputs,
}

impl Ctx<'_> {
    fn say(&self, msg: impl AsRef<str>) {
        if !self.g.quiet {
            println!("{}", msg.as_ref());
        }
    }

    fn cfg(&self) -> ExactConfig {
        ExactConfig {
            max_vertices: self.g.cap,
            node_budget: self.g.budget,
        }
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.feed(&path.display().to_string(), text.as_bytes());
        Ok(text)
    }

    /// An edge-list path or `named:<name>`.
    fn graph(&mut self, spec: &str) -> Result<Graph> {
        if let Some(name) = spec.strip_prefix("named:") {
            let g = named_graph(name)?;
            self.inputs.feed(spec, write_edge_list(&g).as_bytes());
            return Ok(g);
        }
        let text = self.read(Path::new(spec))?;
        parse_edge_list(&text).with_context(|| format!("parsing {spec}"))
    }

    fn order(&mut self, path: &Path, n: usize) -> Result<LinearOrder> {
        let o = LinearOrder::parse(&self.read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        if o.len() != n {
            bail!("order in {} has {} entries, graph has {n} vertices", path.display(), o.len());
        }
        Ok(o)
    }

    fn td(&mut self, path: &Path, n: usize) -> Result<TreeDecomposition> {
        let (declared, td) = parse_pace(&self.read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        if declared != n {
            bail!("decomposition in {} is for {declared} vertices, graph has {n}", path.display());
        }
        Ok(td)
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Writes to `out`, or prints when no path is given.
fn emit(out: Option<&PathBuf>, text: &str, report: &mut Report) -> Result<()> {
    match out {
        Some(p) => {
            write(p, text)?;
            report.witness(p);
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn exact(g: &Graph, m: Measure, r: usize, cfg: &ExactConfig) -> Result<Exact> {
    Ok(match m {
        Measure::Wcol => wcol_exact(g, r, cfg)?,
        Measure::Col => col_exact(g, r, cfg)?,
        Measure::Adm => adm_exact(g, r, cfg)?,
    })
}

fn evaluate(g: &Graph, m: Measure, o: &LinearOrder, r: usize) -> Result<usize> {
    Ok(match m {
        Measure::Wcol => eval_wcol(g, o, r)?,
        Measure::Col => eval_col(g, o, r)?,
        Measure::Adm => eval_adm(g, o, r)?,
    })
}

/// Resolves a non-exact order source and names it.
fn pick_order(ctx: &mut Ctx, g: &Graph, src: &OrderSource, r: usize) -> Result<(LinearOrder, String)> {
    if let Some(p) = &src.order {
        return Ok((ctx.order(p, g.n())?, format!("file:{}", p.display())));
    }
    match &src.heuristic {
        Some(name) => Ok((heuristic_order(g, name, r)?, name.clone())),
        None => Ok((degeneracy_order(g), "degeneracy".into())),
    }
}

pub fn run(cmd: Command, g: &Global, inputs: &mut Inputs) -> Result<Report> {
    let mut ctx = Ctx { g, inputs };
    match cmd {
        Command::Compute { measure, graph, r, source, witness } => compute(&mut ctx, measure, &graph, r, &source, witness),
        Command::Order { graph, r, measure, source, td, out } => order(&mut ctx, &graph, r, measure, &source, td, out),
        Command::Gen(c) => gen(&mut ctx, c),
        Command::Td(c) => td(&mut ctx, c),
        Command::Cover(c) => cover(&mut ctx, c),
        Command::Reduce(ReduceCommand::Bcbs { graph, k, out, verify }) => bcbs(&mut ctx, &graph, k, out, verify),
        Command::Tgrad { graph, r } => tgrad(&mut ctx, &graph, r),
        Command::Exp(c) => exp(&mut ctx, c),
    }
}

fn compute(ctx: &mut Ctx, m: Measure, spec: &str, r: usize, src: &OrderSource, witness: Option<PathBuf>) -> Result<Report> {
    let g = ctx.graph(spec)?;
    let mut rep = Report::new(&format!("compute {}", m.name()), ctx.g.seed)
        .param("graph", spec)
        .param("r", r)
        .param("n", g.n())
        .param("m", g.m());
    let order = if src.exact {
        let ex = exact(&g, m, r, &ctx.cfg())?;
        rep.value("value", ex.value);
        rep.value("exact", true);
        rep.value("nodes", ex.nodes);
        rep.bound("lower", ex.value);
        rep.bound("upper", ex.value);
        ctx.say(format!("{}_{r} = {} (certified exact)", m.name(), ex.value));
        ex.order
    } else {
        let (o, how) = pick_order(ctx, &g, src, r)?;
        let v = evaluate(&g, m, &o, r)?;
        rep.value("value", v);
        rep.value("exact", false);
        rep.value("order", &how);
        rep.bound("upper", v);
        ctx.say(format!("{}_{r} <= {v} (upper bound from {how} order)", m.name()));
        o
    };
    if let Some(p) = witness {
        write(&p, &order.to_file_string())?;
        rep.witness(&p);
    }
    Ok(rep)
}

fn order(ctx: &mut Ctx, spec: &str, r: usize, m: Measure, src: &OrderSource, td: Option<PathBuf>, out: Option<PathBuf>) -> Result<Report> {
    let g = ctx.graph(spec)?;
    let mut rep = Report::new("order", ctx.g.seed).param("graph", spec).param("r", r);
    let (o, how) = if let Some(p) = td {
        let t = ctx.td(&p, g.n())?;
        (td_order(&g, &t)?, format!("td:{}", p.display()))
    } else if src.exact {
        (exact(&g, m, r, &ctx.cfg())?.order, format!("exact {}", m.name()))
    } else {
        pick_order(ctx, &g, src, r)?
    };
    rep.value("source", &how);
    for measure in [Measure::Wcol, Measure::Col, Measure::Adm] {
        let v = evaluate(&g, measure, &o, r)?;
        rep.value(measure.name(), v);
        ctx.say(format!("{}_{r} under this order: {v}", measure.name()));
    }
    emit(out.as_ref(), &o.to_file_string(), &mut rep)?;
    Ok(rep)
}

fn gen(ctx: &mut Ctx, cmd: GenCommand) -> Result<Report> {
    let seed = ctx.g.seed;
    let (mut rep, g, out) = match cmd {
        GenCommand::Gkr { k, r, max_vertices, out, td, smooth } => {
            let inst = gen_gkr_capped(k, r, max_vertices)?;
            let mut rep = Report::new("gen gkr", seed).param("k", k).param("r", r);
            rep.value("c", inst.c);
            let dec = if smooth { make_smooth(&inst.graph, &inst.td)? } else { inst.td.clone() };
            rep.value("width", dec.width());
            if let Some(p) = td {
                write(&p, &write_pace(&dec, inst.graph.n()))?;
                rep.witness(&p);
            }
            if smooth {
                // certificates need the smooth decomposition
                let certs = (1..=r).map(|rr| binomial_certificate(&inst.graph, &dec, rr)).collect::<gencol::Result<Vec<_>>>()?;
                for c in &certs {
                    ctx.say(format!("root-first order: wcol_{} <= {} (C({}, {k}) = {})", c.r, c.wcol, c.r + k, c.bound));
                }
                rep.bound("certificates", certs);
            }
            (rep, inst.graph, out)
        }
        GenCommand::Named { name, out } => {
            let g = named_graph(&name)?;
            (Report::new("gen named", seed).param("name", name), g, out)
        }
        GenCommand::Subdivide { graph, s, out } => {
            let base = ctx.graph(&graph)?;
            (Report::new("gen subdivide", seed).param("graph", graph).param("s", s), subdivide(&base, s), out)
        }
        GenCommand::Complement { graph, out } => {
            let base = ctx.graph(&graph)?;
            (Report::new("gen complement", seed).param("graph", graph), complement(&base), out)
        }
    };
    rep.value("n", g.n());
    rep.value("m", g.m());
    if out.is_some() {
        ctx.say(format!("n = {}, m = {}", g.n(), g.m()));
    }
    emit(out.as_ref(), &write_edge_list(&g), &mut rep)?;
    Ok(rep)
}

fn td(ctx: &mut Ctx, cmd: TdCommand) -> Result<Report> {
    let seed = ctx.g.seed;
    match cmd {
        TdCommand::Validate { graph, td } => {
            let g = ctx.graph(&graph)?;
            let t = ctx.td(&td, g.n())?;
            let check = validate_td(&g, &t);
            let mut rep = Report::new("td validate", seed).param("graph", graph).param("td", td.display().to_string());
            ctx.say(match &check.violation {
                None => format!("valid, width {}, {} bags, smooth: {}", check.width, check.bags, check.smooth),
                Some(v) => format!("invalid: {v}"),
            });
            rep.failure = check.violation.clone();
            rep.value("report", check);
            Ok(rep)
        }
        TdCommand::Smooth { graph, td, out } => {
            let g = ctx.graph(&graph)?;
            let t = ctx.td(&td, g.n())?;
            let s = make_smooth(&g, &t)?;
            let mut rep = Report::new("td smooth", seed).param("graph", graph);
            rep.value("width", s.width());
            rep.value("bags", s.len());
            emit(out.as_ref(), &write_pace(&s, g.n()), &mut rep)?;
            Ok(rep)
        }
        TdCommand::Order { graph, td, r, out } => {
            let g = ctx.graph(&graph)?;
            let t = ctx.td(&td, g.n())?;
            let o = td_order(&g, &t)?;
            let mut rep = Report::new("td order", seed).param("graph", graph).param("r", r);
            if let Some(r) = r {
                if !t.is_smooth() {
                    bail!("binomial certificates need a smooth decomposition; run `td smooth` first");
                }
                let certs = (1..=r).map(|rr| binomial_certificate(&g, &t, rr)).collect::<gencol::Result<Vec<_>>>()?;
                for c in &certs {
                    ctx.say(format!("wcol_{} <= {} <= C({}, {}) = {}", c.r, c.wcol, c.r + c.width, c.width, c.bound));
                }
                rep.bound("certificates", certs);
            }
            emit(out.as_ref(), &o.to_file_string(), &mut rep)?;
            Ok(rep)
        }
    }
}

fn cover(ctx: &mut Ctx, cmd: CoverCommand) -> Result<Report> {
    let seed = ctx.g.seed;
    match cmd {
        CoverCommand::Build { graph, r, source, out } => {
            let g = ctx.graph(&graph)?;
            let (o, how) = if source.exact {
                (wcol_exact(&g, 2 * r, &ctx.cfg())?.order, "exact wcol_2r".to_string())
            } else {
                pick_order(ctx, &g, &source, 2 * r)?
            };
            let c = build_cover(&g, &o, r)?;
            let check = validate_cover(&g, &c, r);
            let mut rep = Report::new("cover build", seed).param("graph", graph).param("r", r).param("order", how);
            ctx.say(format!("{} clusters, max radius {}, max degree {}", check.clusters, radius(check.max_radius), check.max_degree));
            rep.bound("wcol_2r_of_order", eval_wcol(&g, &o, 2 * r)?);
            rep.value("report", check);
            emit(out.as_ref(), &write_cover(&c), &mut rep)?;
            Ok(rep)
        }
        CoverCommand::Check { graph, cover, r } => {
            let g = ctx.graph(&graph)?;
            let c = parse_cover(&ctx.read(&cover)?, r)?;
            let check = validate_cover(&g, &c, r);
            ctx.say(match &check.violation {
                None => format!("valid {r}-cover: {} clusters, max radius {}, max degree {}", check.clusters, radius(check.max_radius), check.max_degree),
                Some(v) => format!("not a valid {r}-cover: {v}"),
            });
            let mut rep = Report::new("cover check", seed).param("graph", graph).param("r", r);
            rep.failure = check.violation.clone();
            rep.value("report", check);
            Ok(rep)
        }
        CoverCommand::Project { subdivided, base, cover, s, r, out } => {
            let gs = ctx.graph(&subdivided)?;
            let h = ctx.graph(&base)?;
            let c = parse_cover(&ctx.read(&cover)?, r)?;
            let before = validate_cover(&gs, &c, c.r);
            let p = project_cover(&gs, &h, s, &c)?;
            let after = validate_cover(&h, &p, r);
            ctx.say(format!("projected: {} clusters, max degree {} (was {}), valid {r}-cover: {}", after.clusters, after.max_degree, before.max_degree, after.is_cover));
            let mut rep = Report::new("cover project", seed).param("s", s).param("r", r);
            rep.failure = after.violation.clone();
            rep.value("original_degree", before.max_degree);
            rep.value("report", after);
            emit(out.as_ref(), &write_cover(&p), &mut rep)?;
            Ok(rep)
        }
    }
}

fn radius(r: Option<usize>) -> String {
    r.map_or("-".into(), |r| r.to_string())
}

fn bcbs(ctx: &mut Ctx, spec: &str, k: usize, out: Option<PathBuf>, verify: bool) -> Result<Report> {
    let g = ctx.graph(spec)?;
    let bg = BipartiteGraph::from_two_colouring(g)?;
    let (co, threshold) = bcbs_to_wcol(&bg, k)?;
    let mut rep = Report::new("reduce bcbs", ctx.g.seed).param("graph", spec).param("k", k);
    rep.value("n", co.n());
    rep.value("threshold", threshold);
    ctx.say(format!("biclique K_{{{k},{k}}} exists iff wcol_3(complement) <= {threshold}"));
    if let Some(p) = &out {
        let sidecar = p.with_extension("json");
        let meta = serde_json::json!({ "n": co.n(), "k": k, "threshold": threshold });
        write(&sidecar, &(serde_json::to_string_pretty(&meta)? + "\n"))?;
        rep.witness(&sidecar);
    }
    if verify {
        let v = verify_reduction(&bg, k, &ctx.cfg())?;
        ctx.say(format!("biclique: {}, wcol_3 = {}, wcol_4 = {}, equivalence holds: {}", v.biclique, v.wcol3, v.wcol4, v.holds()));
        if !v.holds() {
            rep.failure = Some(format!("reduction check failed: {v:?}"));
        }
        rep.value("verification", v);
    }
    emit(out.as_ref(), &write_edge_list(&co), &mut rep)?;
    Ok(rep)
}

fn tgrad(ctx: &mut Ctx, spec: &str, r: usize) -> Result<Report> {
    let g = ctx.graph(spec)?;
    let t = top_grad_bruteforce(&g, r, ctx.g.budget)?;
    ctx.say(format!("tgrad_{r} = {} ({} branch vertices, {} edges, {} nodes)", t.value, t.branch.len(), t.paths.len(), t.nodes));
    let mut rep = Report::new("tgrad", ctx.g.seed).param("graph", spec).param("r", r).param("cap", TGRAD_CAP);
    rep.value("tgrad", t.value.to_string());
    rep.value("witness", t);
    Ok(rep)
}

fn sample_table(s: &SampleReport, value: &'static str) -> Table {
    Table {
        header: vec!["source", value, "bound", "holds"],
        rows: s
            .orders
            .iter()
            .map(|o| vec![o.source.clone(), o.value.to_string(), o.bound.to_string(), o.holds.to_string()])
            .collect(),
    }
}

fn sampled(ctx: &mut Ctx, name: &str, spec: &str, r: usize, samples: usize, s: SampleReport, value: &'static str) -> Report {
    let mut rep = Report::new(name, ctx.g.seed).param("graph", spec).param("r", r).param("samples", samples);
    let failing = s.orders.iter().filter(|o| !o.holds).count();
    ctx.say(format!(
        "{} orders, min {value} = {}, bound {}, min slack {}, violations {failing}",
        s.orders.len(),
        s.min_value().map_or("-".into(), |v| v.to_string()),
        s.orders.first().map_or("-".into(), |o| o.bound.to_string()),
        s.min_slack().map_or("-".into(), |v| v.to_string()),
    ));
    rep.value("orders", s.orders.len());
    rep.value(&format!("min_{value}"), s.min_value().map(|v| v.to_string()));
    rep.value("min_slack", s.min_slack().map(|v| v.to_string()));
    rep.value("violations", failing);
    if let Some(o) = s.orders.first() {
        rep.bound("per_order", o.bound.to_string());
    }
    if failing > 0 {
        rep.failure = Some(format!("{failing} orders violate the bound"));
    }
    rep.table = Some(sample_table(&s, value));
    rep
}

fn exp(ctx: &mut Ctx, cmd: ExpCommand) -> Result<Report> {
    let seed = ctx.g.seed;
    match cmd {
        ExpCommand::GirthLb { graph, r, samples } => {
            let g = ctx.graph(&graph)?;
            let s = girth_lb(&g, r, samples, seed)?;
            Ok(sampled(ctx, "exp girth-lb", &graph, r, samples, s, "W_r"))
        }
        ExpCommand::Cauchy { graph, r, samples } => {
            let g = ctx.graph(&graph)?;
            let s = cauchy_check(&g, r, samples, seed)?;
            Ok(sampled(ctx, "exp cauchy", &graph, r, samples, s, "U_2r"))
        }
        ExpCommand::AdmBound { count, n_min, n_max, p, radii } => {
            if n_min > n_max {
                bail!("--n-min {n_min} exceeds --n-max {n_max}");
            }
            let rows = adm_bound_sweep(count, n_min..=n_max, p, &radii, seed, &ctx.cfg())?;
            let failing: Vec<_> = rows.iter().filter(|row| !row.report.holds).collect();
            let degenerate = rows.iter().filter(|row| row.report.degenerate).count();
            ctx.say(format!("{} checks, {} violations ({degenerate} checks with tgrad < 1)", rows.len(), failing.len()));
            for row in &failing {
                ctx.say(format!(
                    "  graph {} (n={}, m={}) r={}: adm = {} > {} (tgrad = {})",
                    row.index, row.n, row.m, row.report.r, row.report.adm, row.report.bound, row.report.tgrad
                ));
            }
            let mut rep = Report::new("exp adm-bound", seed)
                .param("count", count)
                .param("n_min", n_min)
                .param("n_max", n_max)
                .param("p", p)
                .param("radii", &radii);
            rep.value("checks", rows.len());
            rep.value("violations", failing.len());
            rep.value("degenerate", degenerate);
            if !failing.is_empty() {
                rep.failure = Some(format!("{} checks violate the bound", failing.len()));
            }
            rep.table = Some(Table {
                header: vec!["graph", "n", "m", "r", "adm", "tgrad", "bound", "holds"],
                rows: rows
                    .iter()
                    .map(|row| {
                        let a = &row.report;
                        vec![row.index.to_string(), row.n.to_string(), row.m.to_string(), a.r.to_string(), a.adm.to_string(), a.tgrad.to_string(), a.bound.to_string(), a.holds.to_string()]
                    })
                    .collect(),
            });
            Ok(rep)
        }
    }
}
