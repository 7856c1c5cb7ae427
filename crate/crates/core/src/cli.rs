//! Command-line front end for the `pp2` binary.
//!
//! [`run`] parses arguments, executes one subcommand inside a rayon pool of
//! `--jobs` workers and returns the exit code together with the captured
//! output, so tests can drive the CLI in-process.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage error, 3 size or
//! budget error.
//!
//! Graph arguments (`--graph`, `--pattern`) accept a family name
//! (`k34s:2`, `m11`, ...), an obstruction name (`k35`, `k44minus`), a file
//! path, or `-` for standard input. Input files may hold graph6 lines or
//! edge-list blocks; the two are told apart by the header line, since
//! graph6 never contains a space.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::FamilySpec;
use crate::classify::{self, Classification, ClassifyError};
use crate::enumerate::{self, EnumerateError};
use crate::graph::{parse_edge_list_block, Graph};
use crate::minor::{self, Obstruction};
use crate::mncliques::{self, CliqueError, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(name = "pp2", version, about = "Triangle-free projective-planar graphs of diameter two")]
struct Cli {
    /// Output format for graphs.
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: Format,
    /// Seed for randomized audits.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a catalog graph.
    Construct {
        /// Family name, e.g. `c5:2,1` or `m11`.
        spec: String,
    },
    /// Decide membership for each input graph.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Append a key/value detail block after each verdict.
        #[arg(long)]
        detail: bool,
    },
    /// Exact domination number with a minimum dominating set.
    Dominate {
        #[command(flatten)]
        input: Input,
    },
    /// Minor model of a pattern in each input graph; without `--pattern`
    /// runs the obstruction battery.
    Minor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Isomorph-free enumeration of connected maximal triangle-free graphs.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        /// Print every graph instead of a count table.
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        #[arg(long, value_enum)]
        verify: Option<Check>,
    },
    /// Exhaustive search for an absolute-clique labeling.
    CliqueSearch {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        kind: CliqueKind,
        /// Largest labeling space to search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// On failure, re-check a 1% random sample of labelings.
        #[arg(long)]
        audit: bool,
    },
    /// Re-derive the characterization or the domination bound.
    Verify {
        #[arg(value_enum)]
        what: Check,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Family name, obstruction name, file path, or `-` for stdin.
    #[arg(long, default_value = "-")]
    graph: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CliqueKind {
    /// (m, n)-colored mixed labelings.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    mn: Option<Vec<usize>>,
    #[arg(long)]
    signed: bool,
    #[arg(long)]
    pushable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Thm2,
    Domination,
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(i32, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(EXIT_USAGE, msg.into())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Disconnected => Failure::usage(e.to_string()),
            ClassifyError::Unresolved => Failure(EXIT_NEGATIVE, e.to_string()),
            _ => Failure(EXIT_BOUND, e.to_string()),
        }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Classify(c) => c.into(),
            _ => Failure(EXIT_BOUND, e.to_string()),
        }
    }
}

impl From<minor::MinorError> for Failure {
    fn from(e: minor::MinorError) -> Self {
        Failure(EXIT_BOUND, e.to_string())
    }
}

impl From<CliqueError> for Failure {
    fn from(e: CliqueError) -> Self {
        match e {
            CliqueError::SearchBudget { .. } => Failure(EXIT_BOUND, e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send)) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("{e}\n") }
        }
    };
    let mut out = String::new();
    let code = match pool.install(|| execute(&cli, stdin, &mut out)) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            return Outcome { code, stdout: out, stderr: format!("error: {msg}\n") };
        }
    };
    Outcome { code, stdout: out, stderr: String::new() }
}

fn execute(cli: &Cli, stdin: &mut (dyn Read + Send), out: &mut String) -> Result<i32, Failure> {
    match &cli.command {
        Command::Construct { spec } => {
            let spec: FamilySpec = spec.parse().map_err(|e: crate::catalog::CatalogError| Failure::usage(e.to_string()))?;
            let g = spec.construct().map_err(|e| Failure::usage(e.to_string()))?;
            write_graph(out, &g, cli.format);
            Ok(EXIT_OK)
        }
        Command::Classify { input, detail } => {
            let mut code = EXIT_OK;
            for g in load_graphs(&input.graph, stdin)? {
                let c = classify::classify(&g)?;
                if !c.is_member() {
                    code = EXIT_NEGATIVE;
                }
                writeln!(out, "{}", c.verdict_line()).unwrap();
                if *detail {
                    out.push_str(&detail_block(&g, &c));
                }
            }
            Ok(code)
        }
        Command::Dominate { input } => {
            for g in load_graphs(&input.graph, stdin)? {
                let r = classify::domination_number(&g)?;
                let w: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
                writeln!(out, "gamma={} witness={}", r.number, w.join(",")).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Minor { input, pattern } => {
            let pattern = pattern
                .as_deref()
                .map(|p| load_graphs(p, stdin).and_then(single))
                .transpose()?;
            let mut code = EXIT_OK;
            for host in load_graphs(&input.graph, stdin)? {
                let found = match &pattern {
                    Some(p) => minor::find_minor(p, &host)?.map(|m| (None, m)),
                    None => minor::obstruction_certificate(&host)?.map(|(o, m)| (Some(o), m)),
                };
                match found {
                    Some((ob, model)) => {
                        if let Some(ob) = ob {
                            writeln!(out, "{ob}").unwrap();
                        }
                        write!(out, "{model}").unwrap();
                    }
                    None => {
                        out.push_str("NONE\n");
                        code = EXIT_NEGATIVE;
                    }
                }
            }
            Ok(code)
        }
        Command::Enumerate { max_n, emit, verify } => {
            if emit.is_some() {
                for g in enumerate::enumerate_mtf(*max_n)? {
                    write_graph(out, &g, cli.format);
                }
                return Ok(EXIT_OK);
            }
            match verify {
                Some(check) => run_check(*check, *max_n, out),
                None => {
                    let graphs = enumerate::enumerate_mtf(*max_n)?;
                    writeln!(out, "{:>3} {:>8}", "n", "graphs").unwrap();
                    for n in 1..=*max_n {
                        let k = graphs.iter().filter(|g| g.order() == n).count();
                        writeln!(out, "{n:>3} {k:>8}").unwrap();
                    }
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Verify { what, max_n } => run_check(*what, *max_n, out),
        Command::CliqueSearch { input, kind, budget, audit } => {
            let g = load_graphs(&input.graph, stdin).and_then(single)?;
            if !g.is_connected() {
                return Err(Failure::usage("base graph must be connected"));
            }
            let (found, space) = if let Some(mn) = &kind.mn {
                let (m, n) = (mn[0], mn[1]);
                let s = mncliques::search_mn_clique(&g, m, n, *budget)?;
                let space = s.space;
                if s.witness.is_none() && *audit {
                    let samples = (space / 100).max(1) as usize;
                    let hits = mncliques::audit_random_labelings(&g, m, n, samples, cli.seed);
                    writeln!(out, "audit samples={samples} cliques={hits}").unwrap();
                }
                (s.witness.map(|w| w.witness_lines()), space)
            } else if kind.signed {
                let s = mncliques::search_signed_clique(&g, *budget)?;
                (s.witness.map(|w| w.witness_lines()), s.space)
            } else {
                let s = mncliques::search_pushable_clique(&g, *budget)?;
                (s.witness.map(|w| w.witness_lines()), s.space)
            };
            match found {
                Some(lines) => {
                    out.push_str(&lines);
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "NONE exhausted={space}").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

fn run_check(check: Check, max_n: usize, out: &mut String) -> Result<i32, Failure> {
    match check {
        Check::Thm2 => {
            let report = enumerate::verify_theorem2(max_n)?;
            out.push_str(&report.table());
            out.push_str(&report.machine_lines());
            let a = report.anomaly_count();
            writeln!(out, "anomalies={a}").unwrap();
            Ok(if a == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Check::Domination => {
            let report = enumerate::verify_domination(max_n)?;
            writeln!(out, "{}", report.summary()).unwrap();
            Ok(if report.holds() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn write_graph(out: &mut String, g: &Graph, format: Format) {
    match format {
        Format::Graph6 => writeln!(out, "{}", g.to_graph6()).unwrap(),
        Format::Edgelist => out.push_str(&g.to_edge_list_text()),
    }
}

fn single(mut graphs: Vec<Graph>) -> Result<Graph, Failure> {
    if graphs.len() != 1 {
        return Err(Failure::usage(format!("expected one graph, got {}", graphs.len())));
    }
    Ok(graphs.pop().unwrap())
}

/// Resolve a graph argument: family name, obstruction name, `-`, or path.
fn load_graphs(arg: &str, stdin: &mut (dyn Read + Send)) -> Result<Vec<Graph>, Failure> {
    if let Ok(spec) = arg.parse::<FamilySpec>() {
        return spec
            .construct()
            .map(|g| vec![g])
            .map_err(|e| Failure::usage(e.to_string()));
    }
    if let Some(ob) = Obstruction::from_name(arg) {
        return Ok(vec![ob.pattern()]);
    }
    let mut text = String::new();
    if arg == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(arg).map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
    }
    parse_graphs(&text).map_err(Failure::usage)
}

/// Graph6 lines and edge-list blocks, in input order.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, String> {
    let mut graphs = Vec::new();
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty()).peekable();
    while let Some(&line) = lines.peek() {
        let g = if line.contains(char::is_whitespace) {
            parse_edge_list_block(&mut lines)
        } else {
            lines.next();
            Graph::from_graph6(line)
        };
        graphs.push(g.map_err(|e| e.to_string())?);
    }
    if graphs.is_empty() {
        return Err("no graph in input".into());
    }
    Ok(graphs)
}

/// Key/value block in a fixed key order.
fn detail_block(g: &Graph, c: &Classification) -> String {
    let mut fields: Vec<(&str, String)> = vec![
        ("order", g.order().to_string()),
        ("size", g.size().to_string()),
        ("graph6", format!("\"{}\"", g.to_graph6())),
    ];
    match c {
        Classification::NotSimpleDiameter2(r) => {
            fields.push(("verdict", "\"out-of-scope\"".into()));
            fields.push(("reason", format!("\"{r}\"")));
        }
        Classification::Member { spec, iso_witness } => {
            fields.push(("verdict", "\"member\"".into()));
            fields.push(("family", format!("\"{spec}\"")));
            fields.push(("iso", format!("{iso_witness:?}")));
        }
        Classification::NonMember { obstruction, model } => {
            fields.push(("verdict", "\"nonmember\"".into()));
            fields.push(("obstruction", format!("\"{obstruction}\"")));
            fields.push(("model", format!("\"{}\"", model.to_inline())));
        }
    }
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}
