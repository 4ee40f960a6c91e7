//! The `dynkin` command line.
//!
//! Exit codes: 0 for success or a positive membership answer, 1 for a
//! negative answer or a failed `verify`, 2 for usage and parse errors.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dynkin_core::catalog::{
    compute_pc_bar, step_json, Catalog, CatalogCache, Membership, SingularityClass, CACHE_DIR_VAR,
};
use dynkin_core::graph::{extend, extension_data, ComponentType, ExtensionData};
use dynkin_core::parse_name;
use dynkin_core::transforms::{elementary_all, tie_all, StepKind, TransformStep};
use dynkin_core::verify;
use dynkin_core::DynkinGraph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dynkin",
    version,
    about = "Elementary and tie transformations of Dynkin graphs and two-step catalogs of the triangle singularities",
    after_help = format!("Catalogs are cached in ${CACHE_DIR_VAR}, else $XDG_CACHE_HOME/dynkin-pc, else ~/.cache/dynkin-pc.")
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Elementary,
    Tie,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every member of a class's catalog.
    Catalog {
        #[arg(value_parser = parse_class)]
        class: SingularityClass,
        #[arg(long)]
        json: bool,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Decide whether a graph belongs to a class's catalog.
    Check {
        #[arg(value_parser = parse_class)]
        class: SingularityClass,
        #[arg(value_parser = parse_graph)]
        graph: DynkinGraph,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_cache: bool,
    },
    /// List all results of one transformation.
    Transform {
        #[arg(value_parser = parse_graph)]
        graph: DynkinGraph,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        json: bool,
    },
    /// Run the regression checks.
    Verify {
        #[arg(long)]
        no_cache: bool,
    },
}

fn parse_class(s: &str) -> Result<SingularityClass, String> {
    s.parse().map_err(|e: dynkin_core::catalog::UnknownClass| e.to_string())
}

fn parse_graph(s: &str) -> Result<DynkinGraph, String> {
    parse_name(s).map_err(|e| e.to_string())
}

fn show(g: &DynkinGraph) -> String {
    if g.is_empty() {
        "(empty)".into()
    } else {
        g.canonical_name()
    }
}

/// Catalog from the cache unless `no_cache`; cache write failures are
/// reported on `err` and otherwise ignored.
fn load_catalog(class: SingularityClass, no_cache: bool, err: &mut dyn Write) -> Catalog {
    match (no_cache, CatalogCache::from_env()) {
        (false, Some(cache)) => {
            let (c, write_err) = cache.get_or_compute(class);
            if let Some(e) = write_err {
                let _ = writeln!(err, "warning: could not write cache in {}: {e}", cache.dir().display());
            }
            c
        }
        _ => compute_pc_bar(class),
    }
}

fn describe_step(step: &TransformStep, out: &mut dyn Write) -> io::Result<()> {
    let x = extend(&step.input);
    let list = |ids: &[usize]| -> String {
        if ids.is_empty() {
            "(none)".into()
        } else {
            ids.iter().map(|&v| x.describe_vertex(v)).collect::<Vec<_>>().join(", ")
        }
    };
    writeln!(out, "  {step}")?;
    match &step.kind {
        StepKind::Elementary(c) => writeln!(out, "    removed: {}", list(&c.removed)),
        StepKind::Tie(c) => {
            writeln!(out, "    A: {}", list(&c.a))?;
            writeln!(out, "    B: {}", list(&c.b))
        }
    }
}

fn cmd_catalog(
    class: SingularityClass,
    json: bool,
    path: Option<PathBuf>,
    no_cache: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let c = load_catalog(class, no_cache, err);
    let text = if json {
        c.to_json()
    } else {
        c.members().map(|m| show(&m.graph) + "\n").collect()
    };
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, text) {
                writeln!(err, "error: cannot write {}: {e}", p.display())?;
                return Ok(EXIT_USAGE);
            }
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_check(
    class: SingularityClass,
    g: &DynkinGraph,
    json: bool,
    no_cache: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    if !g.is_ade() {
        let e = dynkin_core::catalog::QueryNotAde(g.canonical_name());
        writeln!(err, "error: {e}")?;
        return Ok(EXIT_USAGE);
    }
    let c = load_catalog(class, no_cache, err);
    let answer = c.membership(g).expect("A/D/E query");
    if json {
        let witness = match &answer {
            Membership::Yes(w) => json!(w.iter().map(step_json).collect::<Vec<_>>()),
            Membership::No => serde_json::Value::Null,
        };
        let v = json!({
            "class": class.symbol(),
            "graph": g.canonical_name(),
            "member": matches!(answer, Membership::Yes(_)),
            "witness": witness,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializes"))?;
    } else {
        match &answer {
            Membership::Yes(w) => {
                writeln!(out, "yes: {} is in the catalog of {class}", show(g))?;
                for s in w {
                    describe_step(s, out)?;
                }
            }
            Membership::No => {
                let bound = class.milnor() as usize - 2;
                let note = if g.total_vertices() > bound {
                    format!(" ({} vertices > {bound})", g.total_vertices())
                } else {
                    String::new()
                };
                writeln!(out, "no: {} is not in the catalog of {class}{note}", show(g))?;
            }
        }
    }
    Ok(match answer {
        Membership::Yes(_) => EXIT_OK,
        Membership::No => EXIT_NO,
    })
}

fn cmd_transform(g: &DynkinGraph, op: Op, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let steps: Result<Vec<TransformStep>, _> = match op {
        Op::Elementary => elementary_all(g).map(|v| {
            v.into_iter()
                .map(|o| TransformStep { kind: StepKind::Elementary(o.choice), input: g.clone(), output: o.graph })
                .collect()
        }),
        Op::Tie => tie_all(g).map(|v| {
            v.into_iter()
                .map(|o| TransformStep { kind: StepKind::Tie(o.choice), input: g.clone(), output: o.graph })
                .collect()
        }),
    };
    let steps = match steps {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    if json {
        let v = json!({
            "input": g.canonical_name(),
            "op": match op { Op::Elementary => "elementary", Op::Tie => "tie" },
            "outcomes": steps
                .iter()
                .map(|s| json!({ "name": s.output.canonical_name(), "step": step_json(s) }))
                .collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializes"))?;
    } else {
        for s in &steps {
            writeln!(out, "{}", show(&s.output))?;
        }
    }
    Ok(EXIT_OK)
}

/// `verify` with an arbitrary extension table, for fault injection.
pub fn verify_with(
    table: &dyn Fn(ComponentType) -> ExtensionData,
    no_cache: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let results = verify::run_all(&|class| load_catalog(class, no_cache, &mut io::sink()), table);
    let mut failed = Vec::new();
    for r in &results {
        writeln!(out, "{}", r.line())?;
        if !r.passed {
            failed.push(r.name);
        }
    }
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", results.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(err, "failed checks: {}", failed.join(", "))?;
        Ok(EXIT_NO)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Catalog { class, json, out: path, no_cache } => cmd_catalog(class, json, path, no_cache, out, err),
        Command::Check { class, graph, json, no_cache } => cmd_check(class, &graph, json, no_cache, out, err),
        Command::Transform { graph, op, json } => cmd_transform(&graph, op, json, out, err),
        Command::Verify { no_cache } => verify_with(&extension_data, no_cache, out, err),
    };
    match result {
        Ok(code) => code,
        // output closed early, e.g. piped into `head`
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
