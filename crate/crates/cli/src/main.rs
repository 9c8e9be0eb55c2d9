//! factorlab: 2-factors, toughness, forbidden linear forests, extremal
//! families, and exhaustive verification scans on small graphs.
//!
//! Exit codes: 0 success / no counterexamples, 1 usage or parse error,
//! 2 counterexamples found (scan and verify).

use std::io::{BufRead, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use factorlab_core::factor::{
    check_t_bound, find_biased_barrier, find_two_factor, verify_biased_barrier_properties,
};
use factorlab_core::families::{build_family, ExceptionCase, FamilyId, Params};
use factorlab_core::forbidden::{find_induced, LinearForestPattern};
use factorlab_core::graph::Graph;
use factorlab_core::graph6::{encode_graph6, parse_graph_auto};
use factorlab_core::harness::{enumerate_small_graphs, scan, verify_case, ClauseSpec, Status};
use factorlab_core::toughness::{toughness, toughsets, Rational};

#[derive(Parser)]
#[command(name = "factorlab", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Graph input: --graph6, --file (graph6 or "n m" edge list), or stdin.
#[derive(Args)]
#[command(group = ArgGroup::new("input").args(["graph6", "file"]))]
struct GraphInput {
    /// Graph as a graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// Read the graph from a file (graph6 line or `n m` edge list)
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GraphInput {
    /// Load and cap at 32 vertices for the subcommands whose
    /// enumerations are hopeless beyond that.
    fn load_bounded(&self) -> Result<Graph, String> {
        let g = self.load()?;
        if g.n() > 32 {
            return Err(format!(
                "graph has {} vertices; exact scans support at most 32",
                g.n()
            ));
        }
        Ok(g)
    }

    fn load(&self) -> Result<Graph, String> {
        let text = if let Some(s) = &self.graph6 {
            s.clone()
        } else if let Some(path) = &self.file {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        } else {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        };
        parse_graph_auto(&text).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct ClauseArgs {
    /// Forbidden linear forest, e.g. P2+3P1
    #[arg(long)]
    pattern: String,
    /// Toughness threshold, e.g. 1 or 3/2
    #[arg(long)]
    tough: String,
    /// Exception clause: 1a, 1b, 2a, 2b, 3, or none
    #[arg(long, default_value = "none")]
    clause: String,
    /// Require toughness strictly above the threshold
    #[arg(long, conflicts_with = "ge")]
    strict: bool,
    /// Require toughness at least the threshold (default)
    #[arg(long)]
    ge: bool,
}

impl ClauseArgs {
    fn build(&self) -> Result<ClauseSpec, String> {
        let pattern = LinearForestPattern::parse(&self.pattern).map_err(|e| e.to_string())?;
        let threshold: Rational = self.tough.parse().map_err(|e| format!("{e}"))?;
        let exception = match self.clause.as_str() {
            "none" => None,
            other => Some(other.parse::<ExceptionCase>().map_err(|e| e.to_string())?),
        };
        Ok(ClauseSpec::new(pattern, threshold, self.strict, exception))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide 2-factor existence; print YES with an edge list or NO with
    /// a biased barrier
    Twofactor(GraphInput),
    /// Exact toughness as a reduced fraction, with one witness toughset
    Toughness(GraphInput),
    /// Check for an induced linear forest; print FREE or an embedding
    Rfree {
        /// Pattern such as P4+3P1
        pattern: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the biased barrier with its structural report, or NONE
    Barrier(GraphInput),
    /// Emit a named family member as graph6 plus its role map
    Family {
        /// h0..h12, kmn, pn, cn, kn
        name: String,
        /// Clique size parameter for h5 (p >= 5) and h12 (p >= 3)
        #[arg(long)]
        p: Option<usize>,
        /// First side of kmn
        #[arg(short, long)]
        m: Option<usize>,
        /// Second side of kmn; size for pn, cn, kn
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Evaluate one graph against a clause and print the verdict
    Verify {
        #[command(flatten)]
        clause: ClauseArgs,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Scan a stream of graph6 lines for counterexamples to a clause
    Scan {
        #[command(flatten)]
        clause: ClauseArgs,
        /// Read graph6 lines from a file instead of stdin
        #[arg(long)]
        file: Option<PathBuf>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// List all connected graphs on n <= 7 vertices as graph6 lines
    Enum { n: usize },
}

fn barrier_line(g: &Graph) -> String {
    match find_biased_barrier(g) {
        Some(pair) => pair.to_string(),
        None => "NONE".to_string(),
    }
}

fn run(cli: Cli, out: &mut String) -> Result<u8, String> {
    use std::fmt::Write;
    macro_rules! outln {
        ($($arg:tt)*) => { writeln!(out, $($arg)*).expect("write to string") };
    }
    match cli.command {
        Command::Twofactor(input) => {
            let g = input.load_bounded()?;
            match find_two_factor(&g) {
                Some(f) => {
                    let edges: Vec<String> =
                        f.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    outln!("YES {}", edges.join(" "));
                }
                None => outln!("NO {}", barrier_line(&g)),
            }
            Ok(0)
        }
        Command::Toughness(input) => {
            let g = input.load_bounded()?;
            let tau = toughness(&g);
            outln!("{tau}");
            if let Ok(sets) = toughsets(&g) {
                if let Some(first) = sets.first() {
                    outln!("toughset: {first}");
                }
            } else if tau == Rational::ZERO {
                outln!("toughset: {{}}");
            }
            Ok(0)
        }
        Command::Rfree { pattern, input } => {
            let g = input.load()?;
            let p = LinearForestPattern::parse(&pattern).map_err(|e| e.to_string())?;
            match find_induced(&g, &p) {
                None => outln!("FREE"),
                Some(emb) => outln!("{emb}"),
            }
            Ok(0)
        }
        Command::Barrier(input) => {
            let g = input.load_bounded()?;
            match find_biased_barrier(&g) {
                None => outln!("NONE"),
                Some(pair) => {
                    outln!("{pair}");
                    outln!("{}", verify_biased_barrier_properties(&g, &pair));
                    outln!(
                        "size bound |T| >= |S| + sum k|C_2k+1| + 1: {}",
                        if check_t_bound(&pair) { "pass" } else { "FAIL" }
                    );
                }
            }
            Ok(0)
        }
        Command::Family { name, p, m, n } => {
            let id: FamilyId = name.parse().map_err(|e: _| format!("{e}"))?;
            let params = Params { p, m, n };
            let inst = build_family(id, params).map_err(|e| e.to_string())?;
            outln!("{}", encode_graph6(&inst.graph));
            for (role, set) in &inst.roles {
                let verts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                outln!("{role}: {}", verts.join(" "));
            }
            Ok(0)
        }
        Command::Verify { clause, input } => {
            let g = input.load_bounded()?;
            let spec = clause.build()?;
            let id = encode_graph6(&g);
            let verdict = verify_case(&g, &spec, &id).map_err(|e| e.to_string())?;
            outln!("{verdict}");
            Ok(if verdict.status == Status::Counterexample {
                2
            } else {
                0
            })
        }
        Command::Scan { clause, file, json } => {
            let spec = clause.build()?;
            let lines: Vec<String> = match file {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| format!("{}: {e}", path.display()))?
                    .lines()
                    .map(str::to_string)
                    .collect(),
                None => std::io::stdin()
                    .lock()
                    .lines()
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("stdin: {e}"))?,
            };
            let report = scan(lines, &spec);
            if json {
                let value = serde_json::json!({
                    "processed": report.processed(),
                    "consistent": report.consistent,
                    "counterexamples": report.counterexamples,
                    "hypothesis_unmet": report.hypothesis_unmet,
                    "parse_errors": report.parse_errors,
                    "elapsed_seconds": report.elapsed.as_secs_f64(),
                    "counterexample_lines": report.counterexample_lines,
                });
                outln!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                out.push_str(&report.to_string());
            }
            Ok(if report.counterexamples > 0 {
                2
            } else if report.parse_errors > 0 {
                1
            } else {
                0
            })
        }
        Command::Enum { n } => {
            let lines = enumerate_small_graphs(n).map_err(|e| e.to_string())?;
            for line in lines {
                outln!("{line}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    // tolerate a closed pipe on the way out (e.g. piping into `head`)
    use std::io::Write;
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
