use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dpc_core::basis::{count_indsub, count_sub, indsub_basis, sub_basis};
use dpc_core::brute::{brute_hom, brute_indsub, brute_sub};
use dpc_core::canon::isomorphic;
use dpc_core::classify::{classify, gen_host};
use dpc_core::digraph::{Digraph, Partition};
use dpc_core::format::{parse_colored, parse_digraph, parse_hypergraph, write_colored, write_digraph};
use dpc_core::gadgets::{count_cp_hom, MinorOp};
use dpc_core::hom::count_hom;
use dpc_core::hypergraph::{fhtw, InvariantReport};
use dpc_core::interpolation::hom_from_sub_demo;
use dpc_core::limits::Limits;
use dpc_core::rational::{fraction_string, Count};
use dpc_core::Error;

use crate::{BasisKind, Cli, Command, CountKind, GadgetKind};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_DEFECT: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn defect(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_DEFECT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::DuplicateArc(..) | Error::VertexOutOfRange { .. } => EXIT_PARSE,
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::Defect(_) => EXIT_DEFECT,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

/// Parse errors carry the file name along with the line.
fn load<T>(path: &Path, parse: impl Fn(&str) -> dpc_core::Result<T>) -> Result<T> {
    parse(&read(path)?).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn limits(cli_overrides: &[String]) -> Result<Limits> {
    let mut limits = Limits::from_env()?;
    if !cli_overrides.is_empty() {
        eprintln!("warning: raised limits can make the exponential stages run for a very long time or exhaust memory");
        limits = limits.with_overrides(&cli_overrides.join(","))?;
    }
    Ok(limits)
}

pub fn run(cli: Cli) -> Result<()> {
    let limits = limits(&cli.limits)?;
    let out = match cli.command {
        Command::Analyze { pattern, json } => analyze(&load(&pattern, parse_digraph)?, json, &limits)?,
        Command::Count {
            kind,
            pattern,
            host,
            brute,
            verify,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .map_err(|e| CliError::usage(e.to_string()))?;
            }
            let h = load(&pattern, parse_digraph)?;
            let g = load(&host, parse_digraph)?;
            count(kind, &h, &g, brute, verify, &limits)?
        }
        Command::Basis { kind, pattern } => basis(kind, &load(&pattern, parse_digraph)?, &limits)?,
        Command::Fhtw { hypergraph } => {
            let h = load(&hypergraph, parse_hypergraph)?;
            let (width, td) = fhtw(&h, limits.fhtw)?;
            let mut s = format!("fhtw: {width}\nbags: {}\n", td.bags.len());
            for (i, bag) in td.bags.iter().enumerate() {
                let vs: Vec<String> = bag.iter().map(usize::to_string).collect();
                writeln!(s, "bag {i}: {}", vs.join(" ")).unwrap();
            }
            for (a, b) in &td.tree_edges {
                writeln!(s, "tree_edge: {a} {b}").unwrap();
            }
            s
        }
        Command::Interpolate { pattern, host } => {
            interpolate(&load(&pattern, parse_digraph)?, &load(&host, parse_digraph)?, &limits)?
        }
        Command::Gadget {
            kind,
            pattern,
            host,
            args,
            output,
        } => {
            let h = load(&pattern, parse_digraph)?;
            let colored = load(&host, parse_colored)?;
            let op = match (kind, args.as_slice()) {
                (GadgetKind::Sink, t) if !t.is_empty() => MinorOp::SinkDeletion(t.to_vec()),
                (GadgetKind::Contract, &[u, v]) => MinorOp::Contraction(u, v),
                (GadgetKind::Loop, &[u]) => MinorOp::LoopDeletion(u),
                (GadgetKind::Sink, _) => return Err(CliError::usage("sink expects the vertices of the sink class")),
                (GadgetKind::Contract, _) => return Err(CliError::usage("contract expects an arc `u v`")),
                (GadgetKind::Loop, _) => return Err(CliError::usage("loop expects one vertex")),
            };
            let minor = op.apply(&h)?;
            let lifted = op.gadget(&h, &colored)?;
            let before = count_cp_hom(&minor, &colored)?;
            let after = count_cp_hom(&h, &lifted)?;
            write(&output, &write_colored(&lifted))?;
            let s = format!(
                "before: {before}\nafter: {after}\nhost_vertices: {}\nmax_outdegree: {} -> {}\n",
                lifted.graph.vertex_count(),
                colored.graph.max_outdegree(),
                lifted.graph.max_outdegree()
            );
            if before != after {
                print!("{s}");
                return Err(CliError::defect("gadget changed the colour-prescribed count"));
            }
            s
        }
        Command::GenHost {
            n,
            maxout,
            seed,
            acyclic,
            loops,
            output,
        } => {
            if n == 0 {
                return Err(CliError::usage("--n must be at least 1"));
            }
            let text = write_digraph(&gen_host(n, maxout, seed, acyclic, loops));
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    String::new()
                }
                None => text,
            }
        }
    };
    print!("{out}");
    Ok(())
}

fn analyze(h: &Digraph, json: bool, limits: &Limits) -> Result<String> {
    dpc_core::limits::check("pattern vertices", h.vertex_count(), limits.pattern)?;
    let verdict = classify(h, limits)?;
    let report = InvariantReport::compute(h, limits)?;
    if json {
        let value = serde_json::json!({
            "schema": 1,
            "verdict": verdict.to_json(),
            "invariants": report.to_json(),
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&value).unwrap()));
    }
    let mut s = verdict.to_text();
    let shown: Vec<String> = s
        .lines()
        .filter_map(|l| l.split_once(':'))
        .map(|(k, _)| k.to_string())
        .collect();
    for line in report.to_text().lines() {
        if line.split_once(':').is_some_and(|(k, _)| !shown.iter().any(|x| x == k)) {
            writeln!(s, "{line}").unwrap();
        }
    }
    Ok(s)
}

fn engine_count(kind: CountKind, h: &Digraph, g: &Digraph, limits: &Limits) -> dpc_core::Result<Count> {
    match kind {
        CountKind::Hom => count_hom(h, g),
        CountKind::Sub => count_sub(h, g, limits),
        CountKind::Indsub => count_indsub(h, g, limits),
    }
}

fn brute_count(kind: CountKind, h: &Digraph, g: &Digraph, limits: &Limits) -> dpc_core::Result<Count> {
    match kind {
        CountKind::Hom => brute_hom(h, g, limits),
        CountKind::Sub => brute_sub(h, g, limits),
        CountKind::Indsub => brute_indsub(h, g, limits),
    }
}

fn count(kind: CountKind, h: &Digraph, g: &Digraph, brute: bool, verify: bool, limits: &Limits) -> Result<String> {
    if brute {
        return Ok(format!("{}\n", brute_count(kind, h, g, limits)?));
    }
    let value = engine_count(kind, h, g, limits)?;
    if verify {
        let reference = brute_count(kind, h, g, limits)?;
        if reference != value {
            return Err(CliError::defect(format!(
                "engine count {value} differs from brute force {reference}"
            )));
        }
        return Ok(format!("{value}\nverified: brute force agrees\n"));
    }
    Ok(format!("{value}\n"))
}

fn basis(kind: BasisKind, h: &Digraph, limits: &Limits) -> Result<String> {
    let b = match kind {
        BasisKind::Sub => sub_basis(h, limits)?,
        BasisKind::Indsub => indsub_basis(h, limits)?,
    };
    let mut s = String::new();
    for (i, (f, c)) in b.terms.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        writeln!(s, "# coefficient {}", fraction_string(c)).unwrap();
        s.push_str(&write_digraph(f));
    }
    Ok(s)
}

fn interpolate(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<String> {
    let id = Partition::singletons(h.vertex_count());
    let demo = hom_from_sub_demo(h, h, g, &id, limits)?;
    let ex = &demo.extraction;
    let mut s = format!("hom: {}\n", demo.hom);
    for (f, c) in &ex.homs {
        let marker = if isomorphic(f, h, limits.canon)? {
            " (pattern)"
        } else {
            ""
        };
        writeln!(
            s,
            "term n={} m={} loops={}: {c}{marker}",
            f.vertex_count(),
            f.arc_count(),
            f.loop_count()
        )
        .unwrap();
    }
    let max_vertices = ex.query_log.iter().map(|q| q.vertices).max().unwrap_or(0);
    let max_out = ex.query_log.iter().map(|q| q.max_outdegree).max().unwrap_or(0);
    writeln!(s, "queries: {}", ex.query_log.len()).unwrap();
    writeln!(s, "max_query_vertices: {max_vertices}").unwrap();
    writeln!(s, "max_query_outdegree: {max_out}").unwrap();
    writeln!(s, "support_outdegree_bound: {}", ex.support_outdegree_bound).unwrap();
    Ok(s)
}
