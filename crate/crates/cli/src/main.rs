use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gcat::bench::{bench, to_csv, BenchProfile};
use gcat::{
    enumerate_mis, gen_random, oracle_enumerate, parse_edge_list, parse_instance, recognize, serialize_instance,
    verify_mis, Caterpillar, CaterpillarError, EnumerateOptions, GraphError, LevelGraph, MISet, OracleError, Tree,
};

#[derive(Parser)]
#[command(name = "gcat", version, about = "Maximal independent sets of generalised caterpillar trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file or edge list; reads standard input when omitted.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the stage count and hair codes, as `k=K T=t1,t2,...`.
    Recognize(Input),
    /// Collapse length-1 hairs to one per stage.
    Normalize {
        #[command(flatten)]
        input: Input,
        /// Emit the normalized tree as an edge list instead of an instance file.
        #[arg(long)]
        edges: bool,
    },
    /// Print the level graph, one level per line.
    Levelgraph {
        #[command(flatten)]
        input: Input,
        /// Emit Graphviz DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Print the number of maximal independent sets.
    Count(Input),
    /// Stream maximal independent sets, one per line.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        limit: Option<usize>,
        /// List every length-1 pendant instead of one representative per stage.
        #[arg(long)]
        expand: bool,
    },
    /// Check whether a vertex set is a maximal independent set.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Space-separated vertex labels.
        #[arg(long)]
        set: String,
    },
    /// Print a random instance file.
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        max_ones: usize,
        #[arg(long, default_value_t = 0.5)]
        p_two: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Brute-force every maximal independent set (at most 30 vertices).
    Oracle(Input),
    /// Time enumeration over a uniform instance family and print CSV.
    Bench {
        #[arg(long, default_value_t = 10)]
        k_min: usize,
        #[arg(long, default_value_t = 22)]
        k_max: usize,
        /// `two-hairs` or `bare`.
        #[arg(long, default_value = "two-hairs")]
        profile: BenchProfile,
    },
}

enum Failure {
    /// Input is well formed but outside what the command can handle.
    Domain(String),
    /// Bad invocation or malformed input.
    Usage(String),
    Io(io::Error),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<CaterpillarError> for Failure {
    fn from(e: CaterpillarError) -> Self {
        match e {
            CaterpillarError::NotGeneralizedCaterpillar(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// A parsed input: either an instance file or an edge list.
struct Loaded {
    tree: Tree,
    /// The instance; recognized lazily for edge lists.
    instance: Option<Caterpillar>,
}

impl Loaded {
    fn instance(self) -> Result<(Tree, Caterpillar), Failure> {
        match self.instance {
            Some(cat) => Ok((self.tree, cat)),
            None => {
                let cat = recognize(&self.tree)?;
                Ok((self.tree, cat))
            }
        }
    }
}

/// An instance file starts with a line holding a single integer.
fn looks_like_instance(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let mut tokens = l.split_whitespace();
            tokens.next().is_some_and(|t| t.parse::<i64>().is_ok()) && tokens.next().is_none()
        })
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
        }
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let text = read_input(input)?;
    if looks_like_instance(&text) {
        let cat = parse_instance(&text)?;
        Ok(Loaded { tree: cat.to_tree(), instance: Some(cat) })
    } else {
        Ok(Loaded { tree: parse_edge_list(&text)?, instance: None })
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Recognize(input) => {
            let (_, cat) = load(&input)?.instance()?;
            let codes: Vec<String> = cat.codes().iter().map(ToString::to_string).collect();
            writeln!(out, "k={} T={}", cat.k(), codes.join(","))?;
        }
        Command::Normalize { input, edges } => {
            let (_, cat) = load(&input)?.instance()?;
            let (norm, _) = cat.normalize();
            if edges {
                out.write_all(norm.to_tree().to_edge_list().as_bytes())?;
            } else {
                out.write_all(serialize_instance(&norm).as_bytes())?;
            }
        }
        Command::Levelgraph { input, dot } => {
            let (_, cat) = load(&input)?.instance()?;
            let graph = LevelGraph::build(&cat);
            if dot {
                out.write_all(graph.to_dot().as_bytes())?;
            } else {
                for level in 1..=graph.k() {
                    let names: Vec<String> = graph.level(level).map(|v| graph.vertex(v).to_string()).collect();
                    writeln!(out, "{level}: {}", names.join(" "))?;
                }
            }
        }
        Command::Count(input) => {
            let (_, cat) = load(&input)?.instance()?;
            writeln!(out, "{}", LevelGraph::build(&cat).count_paths())?;
        }
        Command::Enumerate { input, limit, expand } => {
            let (_, cat) = load(&input)?.instance()?;
            let graph = LevelGraph::build(&cat);
            let stream = enumerate_mis(&graph, &cat, EnumerateOptions { expand, limit })
                .map_err(|e| Failure::Domain(e.to_string()))?;
            for mis in stream {
                writeln!(out, "{mis}")?;
            }
        }
        Command::Verify { input, set } => {
            let loaded = load(&input)?;
            let set = MISet::parse(&set)?;
            writeln!(out, "{}", verify_mis(&loaded.tree, &set)?)?;
        }
        Command::Gen { k, max_ones, p_two, seed } => {
            let cat = gen_random(k, max_ones, p_two, seed)?;
            out.write_all(serialize_instance(&cat).as_bytes())?;
        }
        Command::Oracle(input) => {
            let loaded = load(&input)?;
            for mis in oracle_enumerate(&loaded.tree)? {
                writeln!(out, "{mis}")?;
            }
        }
        Command::Bench { k_min, k_max, profile } => {
            if k_min < 1 || k_min > k_max {
                return Err(Failure::Usage(format!("need 1 <= k-min <= k-max, got {k_min}..{k_max}")));
            }
            out.write_all(to_csv(&bench(profile, k_min..=k_max)).as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("gcat: error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("gcat: error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("gcat: error: {msg}");
            ExitCode::from(2)
        }
    }
}
