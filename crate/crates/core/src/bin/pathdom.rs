//! Command-line front end. Exit status: 0 ok, 1 counterexample found,
//! 2 usage or input error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pathdom::domination::{classify_vertices, gamma};
use pathdom::family::FamilySpec;
use pathdom::io::{emit_edge_list, emit_graph6, parse_graph_auto, Format};
use pathdom::oracle::Oracle;
use pathdom::path_addition::{pa_direct, pa_profile};
use pathdom::verify::{run_verification, CorpusMode, CorpusSpec, Suite};
use pathdom::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "pathdom",
    version,
    about = "Domination numbers under path addition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::Auto => Format::Auto,
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph file, or "-" for standard input.
    file: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
    File,
    Family,
}

#[derive(Subcommand)]
enum Command {
    /// γ(G) and one minimum dominating set.
    Gamma(Input),
    /// Per-vertex good/bad/critical flags.
    Classify(Input),
    /// pa(u,v) by direct scan and by prediction.
    Pa {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        u: usize,
        #[arg(short)]
        v: usize,
    },
    /// pa for every pair plus the four aggregates.
    Profile(Input),
    /// Class flags and region tag.
    Regions(Input),
    /// Run verification suites over a corpus.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Largest vertex count (exhaustive) or vertex count (random).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the exhaustive vertex-count cap.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
        /// Family spec such as "crown(3)"; repeatable.
        #[arg(long)]
        family: Vec<String>,
        #[arg(long)]
        connected: bool,
        /// Comma-separated suite names or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Generate a named family member.
    Gen {
        /// Family name, or a full spec such as "corona(path(3))".
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. "3,3".
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

enum Failure {
    Input(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let text = if input.file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(Error::from)?;
        s
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Failure::Input(format!("{}: {e}", input.file)))?
    };
    Ok(parse_graph_auto(&text, input.format.into())?)
}

fn print_json<T: serde::Serialize>(x: &T) {
    println!("{}", serde_json::to_string_pretty(x).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gamma(input) => {
            let g = read_graph(&input)?;
            let (k, d) = gamma(&g);
            if input.json {
                print_json(&serde_json::json!({ "gamma": k, "witness": d }));
            } else {
                println!("gamma: {k}\nwitness: {d}");
            }
        }
        Command::Classify(input) => {
            let g = read_graph(&input)?;
            let r = classify_vertices(&g);
            if input.json {
                print_json(&r);
            } else {
                println!(
                    "gamma: {}  i: {}  strong equality: {}",
                    r.gamma, r.i_number, r.strong_equality
                );
                println!("V-: {}", r.v_minus);
                println!(
                    "{:>6} {:>5} {:>9} {:>10}",
                    "vertex", "good", "critical", "gamma(G-v)"
                );
                for v in 0..r.order {
                    println!(
                        "{v:>6} {:>5} {:>9} {:>10}",
                        r.good[v],
                        r.is_critical(v),
                        r.gamma_without[v]
                    );
                }
            }
        }
        Command::Pa { input, u, v } => {
            let g = read_graph(&input)?;
            let direct = pa_direct(&g, u, v)?;
            let pred = Oracle::new(&g).predict(u, v)?;
            if input.json {
                print_json(&serde_json::json!({ "direct": direct, "prediction": pred }));
            } else {
                println!(
                    "pa({u},{v}) direct: {direct}  predicted: {}  clause: {}",
                    pred.pa, pred.clause
                );
                for s in &pred.steps {
                    let val = s
                        .gamma
                        .map_or("undetermined".to_string(), |x| x.to_string());
                    println!("  k={}  gamma={val}  {}", s.k, s.clause);
                }
            }
        }
        Command::Profile(input) => {
            let g = read_graph(&input)?;
            let p = pa_profile(&g)?;
            if input.json {
                print_json(&p);
            } else {
                println!("gamma: {}", p.gamma);
                for pp in &p.pairs {
                    println!(
                        "  {}-{}  {}  {}",
                        pp.u,
                        pp.v,
                        if pp.adjacent { "edge    " } else { "non-edge" },
                        pp.pa
                    );
                }
                println!(
                    "epa: {}  Epa: {}  epa_bar: {}  Epa_bar: {}",
                    p.epa, p.upper_epa, p.co_epa, p.upper_co_epa
                );
            }
        }
        Command::Regions(input) => {
            let g = read_graph(&input)?;
            let rc = Oracle::new(&g).classify_regions()?;
            if input.json {
                print_json(&rc);
            } else {
                println!(
                    "A: {}  A1: {}  A2: {}  A3: {}",
                    rc.in_a, rc.in_a1, rc.in_a2, rc.in_a3
                );
                println!("region: {}", rc.region);
            }
        }
        Command::Verify {
            mode,
            n,
            n_min,
            p,
            count,
            seed,
            cap,
            file,
            format,
            family,
            connected,
            suite,
            json,
            report,
        } => {
            let need_n = || n.ok_or_else(|| Failure::Input("--n is required for this mode".into()));
            let mode = match mode {
                Mode::Exhaustive => {
                    let n_max = need_n()?;
                    CorpusMode::Exhaustive {
                        n_min: n_min.unwrap_or(1),
                        n_max,
                        cap: cap.unwrap_or(pathdom::enumerate::DEFAULT_ENUMERATION_CAP),
                    }
                }
                Mode::Random => {
                    let n_max = need_n()?;
                    CorpusMode::Random {
                        n_min: n_min.unwrap_or(n_max),
                        n_max,
                        p,
                        count,
                        seed,
                    }
                }
                Mode::File => CorpusMode::File {
                    path: file
                        .ok_or_else(|| Failure::Input("--file is required for file mode".into()))?,
                    format: format.into(),
                },
                Mode::Family => CorpusMode::Family {
                    specs: family
                        .iter()
                        .map(|s| s.parse())
                        .collect::<Result<_, Error>>()?,
                },
            };
            let spec = CorpusSpec {
                mode,
                connected_only: connected,
            };
            let suites = Suite::parse_list(&suite)?;
            if suites.is_empty() {
                return Err(Failure::Input("no suites selected".into()));
            }
            let r = run_verification(&spec, &suites)?;
            if let Some(path) = report {
                std::fs::write(&path, r.to_json() + "\n")
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.table());
            }
            if !r.pass {
                return Err(Failure::Counterexample);
            }
        }
        Command::Gen {
            family,
            params,
            format,
        } => {
            let text = if family.contains('(') {
                family
            } else {
                format!("{family}({params})")
            };
            let g = text.parse::<FamilySpec>()?.generate()?;
            match format {
                OutputFormat::Graph6 => println!("{}", emit_graph6(&g)),
                OutputFormat::EdgeList => print!("{}", emit_edge_list(&g)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
