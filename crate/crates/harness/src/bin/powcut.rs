use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use powcut::connectivity::{all_minimum_cutsets, canonical_listing, minimum_vertex_cut};
use powcut::cyclic::{external_overlap, maximal_cyclic_subgroups, nongenerators};
use powcut::error::Error;
use powcut::{Group, PowerGraph, VertexSet};
use powcut_harness::{
    export_dot, full_corpus, parse_group_spec, run_property_suite, survey, verify_theorem, Caps, TheoremId,
    VerificationReport, Verdict,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "powcut", version, about = "Power graph connectivity of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Largest graph on which connectivity is computed.
    #[arg(long, default_value_t = 600)]
    max_vertices: usize,
    /// Node budget for minimum cut-set enumeration.
    #[arg(long, default_value_t = powcut::connectivity::DEFAULT_SEARCH_LIMIT)]
    search_limit: u64,
    /// Fail with exit code 3 when a resource cap is hit.
    #[arg(long)]
    strict: bool,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_vertices: self.max_vertices,
            search_limit: self.search_limit,
            ..Caps::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex connectivity and one minimum cut-set.
    Kappa {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimum cut-sets.
    Cutsets {
        #[arg(long)]
        group: String,
        /// Enumerate every minimum cut-set instead of reporting one.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Maximal cyclic subgroups with their non-generator and overlap sizes.
    MaximalCyclics {
        #[arg(long)]
        group: String,
    },
    /// Check one theorem on one group.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        group: String,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check one theorem over the corpus of groups up to an order.
    Survey {
        #[arg(long)]
        max_order: u64,
        #[arg(long)]
        theorem: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run a property suite over the corpus of groups up to an order.
    Suite {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 60)]
        max_order: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Graphviz text for the power graph.
    ExportDot {
        #[arg(long)]
        group: String,
        /// Comma-separated vertex indices to delete first.
        #[arg(long)]
        remove: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: String) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message,
    }
}

fn graph_of(spec: &str, max_vertices: usize) -> Result<(Group, PowerGraph), Failure> {
    let group = parse_group_spec(spec)?;
    if group.size() < 2 {
        return Err(invalid("connectivity needs at least 2 elements".into()));
    }
    if group.size() > max_vertices {
        return Err(Failure {
            code: EXIT_RESOURCE,
            message: format!("{} vertices exceeds the cap of {max_vertices}", group.size()),
        });
    }
    let graph = PowerGraph::build(&group);
    Ok((group, graph))
}

fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::new(n);
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| invalid(format!("bad vertex index {part:?}")))?;
        if v >= n {
            return Err(invalid(format!("vertex {v} out of range for {n} vertices")));
        }
        set.insert(v);
    }
    Ok(set)
}

fn report_exit(reports: &[VerificationReport], strict: bool) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Mismatch) {
        EXIT_MISMATCH
    } else if strict && reports.iter().any(|r| r.verdict == Verdict::SkippedResource) {
        EXIT_RESOURCE
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Kappa { group, json } => {
            let (g, pg) = graph_of(&group, usize::MAX)?;
            let conn = minimum_vertex_cut(&pg)?;
            let cut = conn.cut.map(|c| c.to_vec());
            if json {
                println!("{}", json!({ "group": g.name(), "kappa": conn.kappa, "cut": cut }));
            } else {
                println!("group {}", g.name());
                println!("kappa {}", conn.kappa);
                match cut {
                    Some(c) => println!("cut {c:?}"),
                    None => println!("cut none (complete graph)"),
                }
            }
            Ok(0)
        }
        Command::Cutsets { group, all, caps } => {
            let (g, pg) = graph_of(&group, caps.max_vertices)?;
            let conn = minimum_vertex_cut(&pg)?;
            println!("group {} kappa {}", g.name(), conn.kappa);
            if !all {
                if let Some(c) = conn.cut {
                    println!("{:?}", c.to_vec());
                }
                return Ok(0);
            }
            match all_minimum_cutsets(&pg, &g.generator_classes(), conn.kappa, caps.search_limit) {
                Ok(sets) => {
                    println!("count {}", sets.len());
                    for s in canonical_listing(&sets) {
                        println!("{s:?}");
                    }
                    Ok(0)
                }
                Err(Error::ResourceLimit { limit, partial }) => {
                    println!("partial {} (search limit {limit} reached)", partial.len());
                    for s in partial {
                        println!("{s:?}");
                    }
                    Ok(if caps.strict { EXIT_RESOURCE } else { 0 })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::MaximalCyclics { group } => {
            let g = parse_group_spec(&group)?;
            println!("generator\torder\t|M~|\t|Mbar|");
            for m in maximal_cyclic_subgroups(&g) {
                let mbar = if g.is_cyclic() {
                    "-".to_string()
                } else {
                    external_overlap(&g, &m)?.len().to_string()
                };
                println!("{}\t{}\t{}\t{}", m.generator, m.order, nongenerators(&g, &m).len(), mbar);
            }
            Ok(0)
        }
        Command::Verify { theorem, group, caps } => {
            let theorem: TheoremId = theorem.parse()?;
            let g = parse_group_spec(&group)?;
            let report = verify_theorem(theorem, &g, &caps.caps())?;
            println!("{}", report.to_json());
            Ok(report_exit(std::slice::from_ref(&report), caps.strict))
        }
        Command::Survey {
            max_order,
            theorem,
            format,
            caps,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let corpus = full_corpus(max_order)?;
            let reports = survey(theorem, &corpus, &caps.caps())?;
            match format {
                Format::Json => {
                    for r in &reports {
                        println!("{}", r.to_json());
                    }
                }
                Format::Csv => {
                    println!("{}", VerificationReport::csv_header());
                    for r in &reports {
                        println!("{}", r.to_csv_row());
                    }
                }
            }
            Ok(report_exit(&reports, caps.strict))
        }
        Command::Suite { suite, max_order, caps } => {
            let corpus = full_corpus(max_order)?;
            let summary = run_property_suite(&suite, &corpus, &caps.caps())?;
            println!("{}", summary.to_json());
            eprintln!(
                "{}: {} pass, {} fail, {} n/a",
                summary.suite,
                summary.passed(),
                summary.failed(),
                summary.count("n/a")
            );
            Ok(if summary.failed() > 0 { EXIT_MISMATCH } else { 0 })
        }
        Command::ExportDot { group, remove } => {
            let g = parse_group_spec(&group)?;
            let removed = remove.map(|r| parse_vertex_list(&r, g.size())).transpose()?;
            print!("{}", export_dot(&g, removed.as_ref()));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
