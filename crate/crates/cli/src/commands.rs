use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use serde_json::{json, Value};

use forcing_core::constructions::{
    all_horizontal_matching, cacm, cacm_forcing_set, connect_matchings, dcacm, eliminate_brackets,
    replay as replay_trace, theorem13_matching, ucacm, HeightCase,
};
use forcing_core::generators::{
    make_cylinder, make_gadget_g, make_glued_spectrum_graph, make_grid, make_hypercube,
    make_reduction_h, make_stop_sign, make_torus,
};
use forcing_core::io::{
    graph_from_json, graph_to_json, to_dot, to_pretty_json, trace_from_json, trace_to_json,
    CertificateFile, EdgeListFile, SpectrumFile,
};
use forcing_core::{
    enumerate_perfect_matchings, find_alternating_cycle_avoiding, max_disjoint_alternating_cycles,
    Edge, EdgeSet, Error, ForcingSolver, Graph, Matching,
};

use crate::{
    ConnectArgs, ConstructArgs, EliminateArgs, Family, ForcingNumberArgs, GenerateArgs, Height,
    Pattern, ReduceArgs, ReplayArgs, SpectrumArgs, VerifyArgs,
};

/// Files written and the graph a command worked on, for the run manifest.
#[derive(Debug, Default)]
pub struct Ctx {
    pub outputs: Vec<PathBuf>,
    pub graph: Option<Value>,
}

impl Ctx {
    fn write(&mut self, path: &Path, contents: &str) -> anyhow::Result<()> {
        fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
        self.outputs.push(path.to_path_buf());
        Ok(())
    }

    /// Writes to `path`, or prints to stdout when there is none.
    fn emit(&mut self, path: Option<&Path>, contents: &str) -> anyhow::Result<()> {
        match path {
            Some(p) => self.write(p, contents),
            None => {
                print!("{contents}");
                Ok(())
            }
        }
    }

    fn graph_file(&mut self, path: &Path) {
        self.graph = Some(json!({ "file": path }));
    }
}

/// Input problems that are not library errors; exit status 2.
#[derive(Debug)]
pub struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<Error>() {
        return match e {
            Error::InvalidParameter(_)
            | Error::InvalidGraph(_)
            | Error::Precondition(_)
            | Error::MissingCoords
            | Error::Json(_) => 2,
            Error::HashMismatch { .. } => 3,
            Error::EdgeNotInGraph(_)
            | Error::NotPerfect(_)
            | Error::NotSubset(_)
            | Error::InvalidSwitch(_) => 4,
            Error::NoPerfectMatching => 5,
            Error::BudgetExhausted(_) => 6,
        };
    }
    if err.downcast_ref::<Usage>().is_some() || err.downcast_ref::<serde_json::Error>().is_some() {
        return 2;
    }
    if err.downcast_ref::<clap::Error>().is_some() {
        return 2;
    }
    1
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(ctx: &mut Ctx, path: &Path) -> anyhow::Result<Graph> {
    ctx.graph_file(path);
    Ok(graph_from_json(&read(path)?)?)
}

fn load_edges(path: &Path) -> anyhow::Result<EdgeListFile> {
    let file: EdgeListFile = serde_json::from_str(&read(path)?).map_err(Error::from)?;
    Ok(file)
}

fn load_matching(g: &Graph, path: &Path) -> anyhow::Result<Matching> {
    Ok(load_edges(path)?.to_matching(g)?)
}

fn edge_list_json(g: &Graph, edges: &[Edge]) -> String {
    to_pretty_json(&EdgeListFile::new(g, edges))
}

fn brace(edges: impl IntoIterator<Item = Edge>) -> String {
    edges
        .into_iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn need(name: &str, value: Option<usize>) -> anyhow::Result<usize> {
    value.ok_or_else(|| usage(format!("missing --{name}")))
}

pub fn generate(ctx: &mut Ctx, a: GenerateArgs) -> anyhow::Result<()> {
    let mut forcing = None;
    let g = match a.family {
        Family::Grid => make_grid(need("m", a.m)?, need("n", a.n)?)?,
        Family::Cylinder => make_cylinder(need("m", a.m)?, need("n", a.n)?)?,
        Family::Torus => make_torus(need("m", a.m)?, need("n", a.n)?)?,
        Family::StopSign => make_stop_sign(need("n", a.n)?, need("k", a.k)?)?,
        Family::GadgetG => {
            let (g, set) = make_gadget_g(need("n", a.n)?)?;
            forcing = Some(set);
            g
        }
        Family::Glued => {
            if a.set.is_empty() {
                return Err(usage("glued needs --set with at least one value"));
            }
            make_glued_spectrum_graph(&a.set.iter().copied().collect::<BTreeSet<_>>())?
        }
        Family::Hypercube => make_hypercube(need("d", a.d)?)?,
    };
    ctx.graph = Some(g.family().to_value());
    ctx.emit(a.out.as_deref(), &graph_to_json(&g))?;
    if let Some(path) = &a.dot {
        let highlight = forcing.as_ref().map(EdgeSet::as_slice);
        ctx.write(path, &to_dot(&g, highlight))?;
    }
    if let Some(set) = &forcing {
        if let Some(path) = &a.forcing_out {
            ctx.write(path, &edge_list_json(&g, set.as_slice()))?;
        }
        if let Some(path) = &a.matching_out {
            let m = enumerate_perfect_matchings(&g)
                .find(|m| set.iter().all(|&e| m.contains(e)))
                .ok_or(Error::NoPerfectMatching)?;
            ctx.write(path, &edge_list_json(&g, m.edges()))?;
        }
    } else if a.forcing_out.is_some() || a.matching_out.is_some() {
        return Err(usage(
            "--forcing-out and --matching-out apply to gadget-g only",
        ));
    }
    if a.out.is_some() {
        println!(
            "{}: {} vertices, {} edges, hash {}",
            g.family().name,
            g.vertex_count(),
            g.edge_count(),
            g.graph_hash()
        );
        if let Some(set) = &forcing {
            println!("forcing edges: {}", brace(set.iter().copied()));
        }
    }
    Ok(())
}

pub fn forcing_number(ctx: &mut Ctx, a: ForcingNumberArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let m = load_matching(&g, &a.matching)?;
    let cert = ForcingSolver::with_budget(a.budget).solve(&g, &m)?;
    let (packing, _) = max_disjoint_alternating_cycles(&g, &m)?;
    println!("forcing number: {}", cert.size);
    println!("forcing set: {}", brace(cert.set.iter().copied()));
    println!("packing number: {packing}");
    if let Some(path) = &a.out {
        ctx.write(
            path,
            &to_pretty_json(&CertificateFile::new(&g, &cert, packing)),
        )?;
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: u64, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| anyhow!("cannot start worker pool: {e}"))?;
    Ok(pool.install(f))
}

pub fn spectrum(ctx: &mut Ctx, a: SpectrumArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let solver = ForcingSolver::with_budget(a.budget);
    let result = with_jobs(a.jobs, || solver.spectrum(&g))??;
    let values = result
        .values()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    println!("spectrum: {{{values}}}");
    println!("f = {}, F = {}", result.f_min, result.f_max);
    println!("matchings: {}", result.matching_count);
    if let Some(path) = &a.out {
        ctx.write(path, &to_pretty_json(&SpectrumFile::new(&g, &result)))?;
    }
    Ok(())
}

pub fn verify(ctx: &mut Ctx, a: VerifyArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let (m, set) = match (&a.certificate, &a.matching, &a.set) {
        (Some(path), _, _) => {
            let cert: CertificateFile = serde_json::from_str(&read(path)?).map_err(Error::from)?;
            let as_list = |edges: &[Edge]| EdgeListFile {
                graph_hash: cert.graph_hash.clone(),
                edges: edges.to_vec(),
            };
            let m = as_list(&cert.matching).to_matching(&g)?;
            (m, as_list(&cert.forcing_set).to_edge_set(&g)?)
        }
        (None, Some(mp), Some(sp)) => (load_matching(&g, mp)?, load_edges(sp)?.to_edge_set(&g)?),
        _ => {
            return Err(usage(
                "verify needs --certificate or both --matching and --set",
            ))
        }
    };
    match find_alternating_cycle_avoiding(&g, &m, &set)? {
        None => println!("yes"),
        Some(cycle) => {
            println!("no");
            let vertices = cycle
                .vertices()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>();
            println!("cycle: {}", vertices.join(" "));
        }
    }
    Ok(())
}

pub fn construct(ctx: &mut Ctx, a: ConstructArgs) -> anyhow::Result<()> {
    let (g, m, set) = match a.pattern {
        Pattern::Cacm => {
            let (rows, cols) = (need("m", a.m)?, need("n", a.n)?);
            let set = cacm_forcing_set(rows, cols)?;
            (make_grid(rows, cols)?, cacm(rows, cols)?, Some(set))
        }
        Pattern::Ucacm => {
            let (rows, cols) = (need("m", a.m)?, need("n", a.n)?);
            (make_grid(rows, cols)?, ucacm(rows, cols)?, None)
        }
        Pattern::Dcacm => {
            let (rows, cols) = (need("m", a.m)?, need("n", a.n)?);
            (make_grid(rows, cols)?, dcacm(rows, cols)?, None)
        }
        Pattern::Theorem13 => {
            let case = match a.height {
                Height::Even => HeightCase::EvenHeight,
                Height::Odd => HeightCase::OddHeight,
            };
            let inst = theorem13_matching(need("k", a.k)?, need("l", a.l)?, need("r", a.r)?, case)?;
            println!("bound: {}", inst.bound);
            (inst.graph, inst.matching, Some(inst.forcing_set))
        }
        Pattern::AllHorizontal => {
            let path = a
                .graph
                .as_deref()
                .ok_or_else(|| usage("all-horizontal needs --graph"))?;
            let g = load_graph(ctx, path)?;
            let m = all_horizontal_matching(&g)?;
            (g, m, None)
        }
    };
    if ctx.graph.is_none() {
        ctx.graph = Some(g.family().to_value());
    }
    ctx.emit(a.out.as_deref(), &edge_list_json(&g, m.edges()))?;
    if let Some(path) = &a.graph_out {
        ctx.write(path, &graph_to_json(&g))?;
    }
    match (&set, &a.set_out) {
        (Some(set), Some(path)) => ctx.write(path, &edge_list_json(&g, set.as_slice()))?,
        (None, Some(_)) => return Err(usage("--set-out applies to cacm and theorem13 only")),
        _ => {}
    }
    if a.out.is_some() {
        let (rows, cols) = g
            .coord_index()
            .map(|i| (i.rows(), i.cols()))
            .unwrap_or_default();
        println!("matching on {rows}x{cols} grid: {} edges", m.len());
    }
    if let Some(set) = &set {
        println!("forcing set size: {}", set.len());
    }
    Ok(())
}

pub fn reduce(ctx: &mut Ctx, a: ReduceArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let m = load_matching(&g, &a.matching)?;
    let (h, gadgets) = make_reduction_h(&g, &m)?;
    ctx.write(&a.out, &graph_to_json(&h))?;
    if let Some(path) = &a.map_out {
        let map = json!({ "source_hash": g.graph_hash(), "graph_hash": h.graph_hash(), "gadgets": gadgets });
        ctx.write(path, &to_pretty_json(&map))?;
    }
    println!(
        "H: {} vertices, {} edges, {} gadgets",
        h.vertex_count(),
        h.edge_count(),
        gadgets.len()
    );
    Ok(())
}

pub fn connect(ctx: &mut Ctx, a: ConnectArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let m1 = load_matching(&g, &a.from)?;
    let m2 = load_matching(&g, &a.to)?;
    let steps = connect_matchings(&g, &m1, &m2)?;
    ctx.emit(a.out.as_deref(), &trace_to_json(&steps))?;
    if a.out.is_some() {
        println!("steps: {}", steps.len());
    }
    Ok(())
}

pub fn eliminate(ctx: &mut Ctx, a: EliminateArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let m = load_matching(&g, &a.matching)?;
    let (result, steps) = eliminate_brackets(&g, &m)?;
    ctx.emit(a.out.as_deref(), &trace_to_json(&steps))?;
    if let Some(path) = &a.result_out {
        ctx.write(path, &edge_list_json(&g, result.edges()))?;
    }
    if a.out.is_some() {
        println!("steps: {}", steps.len());
    }
    Ok(())
}

pub fn replay(ctx: &mut Ctx, a: ReplayArgs) -> anyhow::Result<()> {
    let g = load_graph(ctx, &a.graph)?;
    let m = load_matching(&g, &a.matching)?;
    let steps = trace_from_json(&read(&a.trace)?)?;
    let result = replay_trace(&g, &m, &steps)?;
    ctx.emit(a.out.as_deref(), &edge_list_json(&g, result.edges()))?;
    if a.out.is_some() {
        println!("replayed {} steps", steps.len());
    }
    Ok(())
}
