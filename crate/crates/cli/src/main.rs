//! `pcpath`: command-line front end over ECG v1 files.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use pcpath_core::generators::{self, RandomSpec};
use pcpath_core::io::{read_ecg, to_dot, to_ecg_string, ParseError};
use pcpath_core::oracle::{longest_pc_cycle, longest_pc_path, OracleError};
use pcpath_core::rotation::{apply_move, apply_positional, closure, endpoint_sets, ClosureKind, Move};
use pcpath_core::verify::{
    check, conjecture_search, CheckError, CheckOptions, Conjecture, HuntOptions, Theorem,
};
use pcpath_core::yeo::{certify_acyclic, Acyclicity, YeoError};
use pcpath_core::EdgeColouredGraph;

mod code {
    pub const OK: u8 = 0;
    pub const OTHER: u8 = 1;
    pub const FAIL: u8 = 2;
    pub const INCONCLUSIVE: u8 = 3;
    pub const COUNTEREXAMPLE: u8 = 4;
    pub const USAGE: u8 = 64;
    pub const MALFORMED: u8 = 65;
    pub const INVALID_TUPLE: u8 = 66;
    pub const PRECONDITION: u8 = 67;
    pub const IO: u8 = 74;
}

/// An error with its exit code.
#[derive(Debug)]
struct Exit(u8, String);

type Res<T = u8> = Result<T, Exit>;

impl From<OracleError> for Exit {
    fn from(e: OracleError) -> Self {
        Exit(code::PRECONDITION, e.to_string())
    }
}

fn io_err(what: &Path, e: io::Error) -> Exit {
    Exit(code::IO, format!("{}: {e}", what.display()))
}

#[derive(Parser)]
#[command(name = "pcpath", version, about = "Properly coloured paths and cycles in edge-coloured graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph family as ECG.
    Gen(GenArgs),
    /// Longest properly coloured path or cycle.
    Oracle {
        #[arg(value_enum)]
        what: OracleKind,
        /// ECG file; `-` or absent reads standard input.
        file: Option<PathBuf>,
        /// Node-expansion budget; the result is marked inexact if it runs out.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Apply rotations (`f:i`, `g:j`, `reflect`) to a path tuple.
    Rotate {
        file: Option<PathBuf>,
        /// Comma-separated vertex tuple.
        #[arg(long)]
        path: String,
        /// Moves, applied left to right.
        #[arg(long = "op", required = true)]
        ops: Vec<String>,
        /// Pure permutations on the tuple; no graph is read.
        #[arg(long)]
        positional: bool,
    },
    /// Size and endpoint sets of the rotation closure of a path.
    Closure {
        file: Option<PathBuf>,
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Rotations only (no reflections).
        #[arg(long)]
        prime: bool,
    },
    /// Cut-vertex certificate chain, or a p.c. cycle.
    Yeo {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a bound; one JSON report per instance.
    Check {
        /// thm2, thm3:k, cor3, thm6, thm8, prop4:d,k,p, conj5:k or conj7.
        theorem: String,
        /// ECG files (standard input if none; ignored by prop4).
        files: Vec<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        /// Added to the bound; for exercising the failure path.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Search for counterexamples to a conjecture.
    Hunt {
        #[arg(value_enum)]
        conjecture: ConjArg,
        /// Cycle length parameter for conj5.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of candidate instances.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Where a counterexample is written.
        #[arg(short, long, default_value = "counterexample.ecg")]
        output: PathBuf,
    },
    /// Graphviz rendering with colour ids as edge labels.
    ExportDot {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum OracleKind {
    Path,
    Cycle,
}

#[derive(Copy, Clone, ValueEnum)]
enum ConjArg {
    Conj5,
    Conj7,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file (standard output if absent).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// A hub joined to p rainbow copies of K_d, each in its own colour
    Tilde { d: usize, p: usize },
    /// n-vertex graph with colour degree d and longest path floor(3d/2)
    Hat { d: usize, n: usize },
    /// Hub joined to p colour-disjoint copies of the (d-1) member
    Recursive { d: usize, k: usize, p: usize },
    /// k colours, monochromatic degree delta, short p.c. paths
    MonoCounterexample {
        k: usize,
        delta: usize,
        /// Size of the independent side before blow-up.
        #[arg(long)]
        y: Option<usize>,
    },
    /// K_n with every edge a distinct colour
    RainbowComplete { n: usize },
    /// K_n properly coloured by round-robin matchings
    ProperComplete { n: usize },
    /// Random graph with minimum colour degree at least d
    Random {
        n: usize,
        d: usize,
        colours: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long)]
        connected: bool,
    },
}

fn load(file: Option<&Path>) -> Res<EdgeColouredGraph> {
    let parsed = match file {
        None => read_ecg(io::stdin().lock()),
        Some(p) if p == Path::new("-") => read_ecg(io::stdin().lock()),
        Some(p) => {
            let f = File::open(p).map_err(|e| io_err(p, e))?;
            read_ecg(BufReader::new(f))
        }
    };
    let name = file.map_or("<stdin>".into(), |p| p.display().to_string());
    parsed.map_err(|e| match e {
        ParseError::Io(e) => Exit(code::IO, format!("{name}: {e}")),
        e => Exit(code::MALFORMED, format!("{name}: {e}")),
    })
}

fn emit(output: Option<&Path>, text: &str) -> Res<()> {
    match output {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Exit(code::IO, e.to_string()))
        }
    }
}

fn parse_tuple(s: &str) -> Res<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Exit(code::INVALID_TUPLE, format!("bad vertex `{t}` in `{s}`"))))
        .collect()
}

fn join(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn pool(jobs: Option<usize>) -> Res<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Exit(code::OTHER, e.to_string()))
}

fn gen(args: GenArgs) -> Res {
    let bad = |e: generators::GenError| Exit(code::PRECONDITION, e.to_string());
    let g = match args.family {
        Family::Tilde { d, p } => generators::gen_tilde(d, p).map_err(bad)?,
        Family::Hat { d, n } => generators::gen_hat(d, n).map_err(bad)?,
        Family::Recursive { d, k, p } => generators::gen_recursive(d, k, p).map_err(bad)?,
        Family::MonoCounterexample { k, delta, y: None } => generators::gen_counterexample_mono(k, delta).map_err(bad)?,
        Family::MonoCounterexample { k, delta, y: Some(y) } => {
            generators::gen_counterexample_mono_with_y(k, delta, y).map_err(bad)?
        }
        Family::RainbowComplete { n } => generators::gen_rainbow_complete(n),
        Family::ProperComplete { n } => generators::gen_proper_complete(n).map_err(bad)?.0,
        Family::Random { n, d, colours, seed, density, connected } => {
            let spec = RandomSpec { n, d, colours, density, seed, connected };
            generators::gen_random_min_cdeg(&spec).map_err(bad)?
        }
    };
    emit(args.output.as_deref(), &to_ecg_string(&g))?;
    Ok(code::OK)
}

fn exactness(exact: bool) -> &'static str {
    if exact {
        "exact"
    } else {
        "inexact (budget exhausted)"
    }
}

fn oracle(what: OracleKind, file: Option<&Path>, budget: Option<u64>, as_json: bool) -> Res {
    let g = load(file)?;
    let (length, witness, exact, expansions) = match what {
        OracleKind::Path => {
            let r = longest_pc_path(&g, budget)?;
            (Some(r.length()), Some(r.path.vertices().to_vec()), r.exact, r.expansions)
        }
        OracleKind::Cycle => {
            let r = longest_pc_cycle(&g, budget)?;
            (r.length(), r.cycle.map(|c| c.closed_tuple().to_vec()), r.exact, r.expansions)
        }
    };
    let kind = match what {
        OracleKind::Path => "path",
        OracleKind::Cycle => "cycle",
    };
    let text = if as_json {
        json!({ "kind": kind, "length": length, "witness": witness, "exact": exact, "expansions": expansions })
            .to_string()
            + "\n"
    } else {
        match (length, witness) {
            (Some(l), Some(w)) => format!("length {l}, {}\nwitness {}\n", exactness(exact), join(&w)),
            _ => format!("no p.c. cycle, {}\n", exactness(exact)),
        }
    };
    emit(None, &text)?;
    Ok(code::OK)
}

fn rotate(file: Option<&Path>, path: &str, ops: &[String], positional: bool) -> Res {
    let mut t = parse_tuple(path)?;
    let moves: Vec<Move> = ops
        .iter()
        .map(|s| s.parse::<Move>().map_err(|e| Exit(code::INVALID_TUPLE, e)))
        .collect::<Res<_>>()?;
    if positional {
        for m in moves {
            t = apply_positional(&t, m).map_err(|e| Exit(code::INVALID_TUPLE, e.to_string()))?;
        }
    } else {
        let g = load(file)?;
        for m in moves {
            t = apply_move(&g, &t, m).map_err(|e| Exit(code::INVALID_TUPLE, format!("{m:?}: {e}")))?.into_vec();
        }
    }
    emit(None, &format!("{}\n", join(&t)))?;
    Ok(code::OK)
}

fn closure_cmd(file: Option<&Path>, path: &str, cap: usize, prime: bool) -> Res {
    let g = load(file)?;
    let t = parse_tuple(path)?;
    let kind = if prime { ClosureKind::RPrime } else { ClosureKind::R };
    let c = closure(&g, &t, kind, cap).map_err(|e| Exit(code::INVALID_TUPLE, e.to_string()))?;
    let (xs, ys) = endpoint_sets(&c);
    let xs: Vec<usize> = xs.into_iter().collect();
    let ys: Vec<usize> = ys.into_iter().collect();
    let label = if prime { "R'" } else { "R" };
    let status = if c.complete { "complete" } else { "truncated at cap" };
    emit(None, &format!("|{label}(P)| = {} ({status})\nX(P) = {}\nY(P) = {}\n", c.len(), join(&xs), join(&ys)))?;
    Ok(code::OK)
}

fn yeo(file: Option<&Path>, as_json: bool) -> Res {
    let g = load(file)?;
    let r = certify_acyclic(&g).map_err(|e| match e {
        YeoError::Oracle(o) => Exit::from(o),
        e => Exit(code::OTHER, e.to_string()),
    })?;
    let text = match (r, as_json) {
        (Acyclicity::Certified(steps), true) => json!({ "acyclic": true, "steps": steps }).to_string() + "\n",
        (Acyclicity::Cycle(c), true) => json!({ "acyclic": false, "cycle": c.closed_tuple() }).to_string() + "\n",
        (Acyclicity::Certified(steps), false) => {
            let mut s = format!("no p.c. cycle: {} certificate(s)\n", steps.len());
            for st in steps {
                let comps: Vec<String> = st
                    .certificate
                    .components
                    .iter()
                    .map(|(c, col)| match col {
                        Some(col) => format!("{{{}}}:{col}", join(c)),
                        None => format!("{{{}}}:-", join(c)),
                    })
                    .collect();
                s += &format!("{}z={} {}\n", "  ".repeat(st.depth), st.certificate.z, comps.join(" "));
            }
            s
        }
        (Acyclicity::Cycle(c), false) => format!("p.c. cycle {}\n", join(c.closed_tuple())),
    };
    emit(None, &text)?;
    Ok(code::OK)
}

fn check_cmd(theorem: &str, files: &[PathBuf], budget: Option<u64>, offset: i64, jobs: Option<usize>) -> Res {
    let thm: Theorem = theorem.parse().map_err(|e: pcpath_core::verify::UnknownTheorem| Exit(code::USAGE, e.to_string()))?;
    let opts = CheckOptions { budget, offset };
    let run = |g: &EdgeColouredGraph, name: &str| -> Res<serde_json::Value> {
        let r = check(g, thm, name, &opts).map_err(|e| match e {
            CheckError::Precondition(m) => Exit(code::PRECONDITION, format!("{name}: {m}")),
            CheckError::Oracle(o) => Exit(code::PRECONDITION, format!("{name}: {o}")),
            e => Exit(code::OTHER, format!("{name}: {e}")),
        })?;
        Ok(serde_json::to_value(r).expect("reports serialise"))
    };
    let reports: Vec<Res<serde_json::Value>> = if matches!(thm, Theorem::PropUpper { .. }) {
        vec![run(&EdgeColouredGraph::new(0), &thm.to_string())]
    } else if files.is_empty() {
        let g = load(None)?;
        vec![run(&g, "<stdin>")]
    } else {
        let graphs: Vec<(String, EdgeColouredGraph)> = files
            .iter()
            .map(|f| Ok((f.display().to_string(), load(Some(f))?)))
            .collect::<Res<_>>()?;
        pool(jobs)?.install(|| graphs.par_iter().map(|(name, g)| run(g, name)).collect())
    };
    let mut worst = code::OK;
    let mut out = String::new();
    for r in reports {
        let v = r?;
        out += &v.to_string();
        out.push('\n');
        let c = match v["verdict"].as_str() {
            Some("pass") => code::OK,
            Some("fail") => code::FAIL,
            _ => code::INCONCLUSIVE,
        };
        if c == code::FAIL || worst == code::OK {
            worst = c;
        }
    }
    emit(None, &out)?;
    Ok(worst)
}

#[allow(clippy::too_many_arguments)]
fn hunt(
    which: ConjArg,
    k: usize,
    max_n: usize,
    max_d: usize,
    seed: u64,
    budget: usize,
    offset: i64,
    jobs: Option<usize>,
    output: &Path,
) -> Res {
    let conj = match which {
        ConjArg::Conj5 if k < 3 => return Err(Exit(code::USAGE, format!("--k must be at least 3, got {k}"))),
        ConjArg::Conj5 => Conjecture::KLessD(k),
        ConjArg::Conj7 => Conjecture::Path,
    };
    if !(3..=pcpath_core::oracle::MAX_ORACLE_VERTICES).contains(&max_n) {
        return Err(Exit(code::USAGE, format!("--max-n must lie in 3..={}", pcpath_core::oracle::MAX_ORACLE_VERTICES)));
    }
    let opts = HuntOptions { max_n, max_d, seed, budget, oracle_budget: None, offset };
    let r = pool(jobs)?.install(|| conjecture_search(conj, &opts));
    eprintln!(
        "generated {}, checked {}, skipped {}, inexact {}",
        r.generated, r.checked, r.skipped, r.inexact
    );
    match r.counterexample {
        None => {
            emit(None, &format!("no counterexample among {} checked instances\n", r.checked))?;
            Ok(code::OK)
        }
        Some(hit) => {
            std::fs::write(output, to_ecg_string(&hit.graph)).map_err(|e| io_err(output, e))?;
            let v = serde_json::to_value(&hit.report).expect("reports serialise");
            emit(None, &format!("{v}\n"))?;
            eprintln!("counterexample {} written to {}", hit.instance, output.display());
            Ok(code::COUNTEREXAMPLE)
        }
    }
}

fn export_dot(file: Option<&Path>, output: Option<&Path>) -> Res {
    let g = load(file)?;
    emit(output, &to_dot(&g))?;
    Ok(code::OK)
}

fn run(cli: Cli) -> Res {
    match cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::Oracle { what, file, budget, json } => oracle(what, file.as_deref(), budget, json),
        Cmd::Rotate { file, path, ops, positional } => rotate(file.as_deref(), &path, &ops, positional),
        Cmd::Closure { file, path, cap, prime } => closure_cmd(file.as_deref(), &path, cap, prime),
        Cmd::Yeo { file, json } => yeo(file.as_deref(), json),
        Cmd::Check { theorem, files, budget, offset, jobs } => check_cmd(&theorem, &files, budget, offset, jobs),
        Cmd::Hunt { conjecture, k, max_n, max_d, seed, budget, offset, jobs, output } => {
            hunt(conjecture, k, max_n, max_d, seed, budget, offset, jobs, &output)
        }
        Cmd::ExportDot { file, output } => export_dot(file.as_deref(), output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { code::USAGE } else { code::OK });
        }
    };
    match run(cli) {
        Ok(c) => ExitCode::from(c),
        Err(Exit(c, msg)) => {
            eprintln!("pcpath: {msg}");
            ExitCode::from(c)
        }
    }
}
