use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use totalb::caterpillar::{solve_with, DensePathType, SolveOptions};
use totalb::colouring::{dense_elements_for, total_degrees, total_m_degree};
use totalb::exact::{solve_exact, SearchConfig, DEFAULT_CAP};
use totalb::generate::{generate, Family};
use totalb::io::{parse_edge_list, to_dot, write_edge_list};
use totalb::reduction::{build_gadget, lift_colouring};
use totalb::{verify, Graph, TotalColouring};

#[derive(Parser)]
#[command(name = "totalb", version, about = "Total b-chromatic colourings")]
struct Cli {
    /// Machine-readable output (errors included).
    #[arg(long, global = true)]
    json: bool,
    /// Graphviz output of the graph (and colouring, if any).
    #[arg(long, global = true, conflicts_with = "json")]
    dot: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a colouring; exit status 0 only for a total b-chromatic one.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Total degrees, m_t and the dense elements.
    Mdegree { graph: PathBuf },
    /// phi_t by exhaustive search.
    Exact {
        graph: PathBuf,
        /// Colour assignments to try before giving up.
        #[arg(long)]
        budget: Option<u64>,
        /// Largest |V| + |E| accepted.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// phi_t of a caterpillar by construction.
    Caterpillar {
        graph: PathBuf,
        /// Search exactly when no construction applies.
        #[arg(long)]
        fallback_exact: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Write an instance in edge-list format.
    Generate {
        family: FamilyArg,
        /// Vertices of a path or leaves of a star.
        #[arg(long)]
        n: Option<usize>,
        /// Target m_t of a type 1 pivot.
        #[arg(long)]
        m: Option<usize>,
        /// Spine length (uniform caterpillar) or dense path length.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        leaves: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Type1)]
        kind: KindArg,
        #[arg(long)]
        flipped: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Build the hardness gadget H from a cubic bipartite graph.
    Reduce {
        graph: PathBuf,
        /// Total 4-colouring of the input to lift to H.
        #[arg(long)]
        with_colouring: Option<PathBuf>,
        /// Where to write the vertex naming map.
        #[arg(long)]
        names: Option<PathBuf>,
        /// Where to write the lifted colouring.
        #[arg(long)]
        lifted: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Star,
    Uniform,
    MinimalDensePath,
    Pivoted1,
    Pivoted2a,
    Pivoted2b,
    Random,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Type1,
    Type2,
    Type3,
}

struct Failure {
    message: String,
    file: Option<String>,
    line: Option<usize>,
}

impl Failure {
    fn new(message: impl ToString) -> Self {
        Failure { message: message.to_string(), file: None, line: None }
    }
}

type Res<T> = Result<T, Failure>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure {
        message: format!("cannot read: {e}"),
        file: Some(path.display().to_string()),
        line: None,
    })
}

fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| Failure {
        message: format!("cannot write: {e}"),
        file: Some(path.display().to_string()),
        line: None,
    })
}

fn load_graph(path: &Path) -> Res<Graph> {
    parse_edge_list(&read(path)?).map_err(|e| Failure {
        message: e.message,
        file: Some(path.display().to_string()),
        line: (e.line > 0).then_some(e.line),
    })
}

fn load_colouring(g: &Graph, path: &Path) -> Res<TotalColouring> {
    TotalColouring::from_json_str(g, &read(path)?).map_err(|e| Failure {
        message: e.to_string(),
        file: Some(path.display().to_string()),
        line: None,
    })
}

fn pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serialisable")
}

/// What a subcommand produced: text for humans, JSON, and an optional
/// coloured graph for `--dot`.
struct Output {
    text: String,
    json: serde_json::Value,
    dot: Option<String>,
    ok: bool,
}

fn run(cli: &Cli) -> Res<Output> {
    match &cli.cmd {
        Cmd::Verify { graph, colouring } => {
            let g = load_graph(graph)?;
            let c = load_colouring(&g, colouring)?;
            let r = verify(&g, &c).map_err(Failure::new)?;
            let mut text = format!("verdict: {:?}\n", r.verdict);
            for (a, b) in &r.conflicts {
                text += &format!("conflict: {a} and {b} share colour {}\n", c.get(*a).unwrap_or(0));
            }
            if !r.complete {
                let missing: Vec<String> = c.uncoloured().map(|x| x.to_string()).collect();
                text += &format!("uncoloured: {}\n", missing.join(" "));
            }
            if r.proper && r.complete && !r.surjective {
                text += &format!("colours in use: {:?} of 1..={}\n", c.colours_used(), c.k());
            }
            let missing = r.missing_witnesses();
            if r.proper && r.complete && r.surjective && !missing.is_empty() {
                text += &format!("no b-chromatic element for colours {missing:?}\n");
            }
            Ok(Output { text, json: json!(r), dot: Some(to_dot(&g, Some(&c))), ok: r.is_valid() })
        }
        Cmd::Mdegree { graph } => {
            let g = load_graph(graph)?;
            let m = total_m_degree(&g).map_err(Failure::new)?;
            let degrees = total_degrees(&g);
            let dense: Vec<String> = dense_elements_for(&g, m).iter().map(|x| x.to_string()).collect();
            let text = format!("m_t: {m}\ndense: {}\n", dense.join(" "));
            let j = json!({ "m_t": m, "total_degrees": degrees, "dense": dense });
            Ok(Output { text, json: j, dot: Some(to_dot(&g, None)), ok: true })
        }
        Cmd::Exact { graph, budget, cap } => {
            let g = load_graph(graph)?;
            let r = solve_exact(&g, &SearchConfig { cap: *cap, budget: *budget }).map_err(Failure::new)?;
            let text = format!(
                "phi_t: {}\nm_t: {}\nnodes: {}\nelapsed_ms: {}\n",
                r.phi_t,
                r.m_t,
                r.nodes_explored,
                r.elapsed.as_millis()
            );
            Ok(Output { text, json: json!(r), dot: Some(to_dot(&g, Some(&r.witness))), ok: true })
        }
        Cmd::Caterpillar { graph, fallback_exact, budget, cap } => {
            let g = load_graph(graph)?;
            let opts = SolveOptions { exact_fallback: *fallback_exact, exact: SearchConfig { cap: *cap, budget: *budget } };
            let out = solve_with(&g, &opts).map_err(Failure::new)?;
            let phi = out.phi_t.map_or("unknown".to_string(), |p| p.to_string());
            let text = format!("phi_t: {phi}\nmethod: {:?}\nm_t: {}\n", out.method, out.certificate.m_t);
            let dot = to_dot(&g, out.colouring.as_ref());
            Ok(Output { text, json: json!(out), dot: Some(dot), ok: true })
        }
        Cmd::Generate { family, n, m, k, leaves, kind, flipped, seed, max_n } => {
            let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Failure::new(format!("this family needs --{flag}")));
            let kind = match kind {
                KindArg::Type1 => DensePathType::Type1,
                KindArg::Type2 => DensePathType::Type2,
                KindArg::Type3 => DensePathType::Type3,
            };
            let f = match family {
                FamilyArg::Path => Family::Path { n: need(*n, "n")? },
                FamilyArg::Star => Family::Star { n: need(*n, "n")? },
                FamilyArg::Uniform => Family::UniformCaterpillar { spine_len: need(*k, "k")?, leaves_per_spine: *leaves },
                FamilyArg::MinimalDensePath => Family::MinimalDensePath { k: need(*k, "k")?, kind, flipped: *flipped },
                FamilyArg::Pivoted1 => Family::PivotedType1 { m: need(*m, "m")? },
                FamilyArg::Pivoted2a => Family::PivotedType2a,
                FamilyArg::Pivoted2b => Family::PivotedType2b,
                FamilyArg::Random => Family::RandomCaterpillar { seed: *seed, max_n: *max_n },
                FamilyArg::Cube => Family::CubeGraph,
            };
            let g = generate(&f).map_err(Failure::new)?;
            let text = write_edge_list(&g);
            let j = json!({ "spec": f, "graph": text });
            Ok(Output { text, json: j, dot: Some(to_dot(&g, None)), ok: true })
        }
        Cmd::Reduce { graph, with_colouring, names, lifted } => {
            let g = load_graph(graph)?;
            let gd = build_gadget(&g).map_err(Failure::new)?;
            let lifted_c = match with_colouring {
                Some(p) => Some(lift_colouring(&gd, &g, &load_colouring(&g, p)?).map_err(Failure::new)?),
                None => None,
            };
            if let Some(p) = names {
                write(p, &pretty(&gd.names()))?;
            }
            if let (Some(p), Some(c)) = (lifted, &lifted_c) {
                write(p, &pretty(c))?;
            }
            let text = write_edge_list(&gd.h);
            let j = json!({ "graph": text, "names": gd.names(), "lifted": lifted_c });
            Ok(Output { text, json: j, dot: Some(to_dot(&gd.h, lifted_c.as_ref())), ok: true })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                pretty(&out.json) + "\n"
            } else if cli.dot {
                out.dot.unwrap_or_default()
            } else {
                out.text
            };
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            let place = match (&f.file, f.line) {
                (Some(file), Some(line)) => format!("{file}:{line}: "),
                (Some(file), None) => format!("{file}: "),
                _ => String::new(),
            };
            eprintln!("error: {place}{}", f.message);
            if cli.json {
                println!("{}", pretty(&json!({ "error": f.message, "file": f.file, "line": f.line })));
            }
            ExitCode::from(2)
        }
    }
}
