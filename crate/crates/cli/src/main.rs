use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use potgraph::graphs::{encode_graph6, find_pattern, write_dot, write_edge_list};
use potgraph::search::{
    oracle_decide_pattern, realize_with_k6c4, sigma_search, verify_range, SearchError,
    VerifyOptions, DEFAULT_ORACLE_BOUND,
};
use potgraph::{parse_notation, sigma_formula_k6c4, DegreeSequence, Graph, Target, Verdict};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "potgraph",
    version,
    about = "Potentially K6-C4 / K5-C4 graphic degree sequences"
)]
struct Cli {
    /// Largest sequence length the exhaustive oracle accepts.
    #[arg(long, global = true, env = "POTGRAPH_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graphicality by Erdős–Gallai and by repeated layoff.
    CheckGraphic { sequence: String },
    /// Decide whether a sequence is potentially target-graphic.
    Check {
        sequence: String,
        #[arg(long, value_enum, default_value_t = TargetArg::K6C4)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = CheckFormat::Text)]
        format: CheckFormat,
    },
    /// Print a realization containing the target.
    Realize {
        sequence: String,
        #[arg(long, value_enum, default_value_t = TargetArg::K6C4)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
        format: GraphFormat,
    },
    /// Smallest even sum forcing a K6-C4 realization.
    Sigma {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TargetArg::K6C4)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = SigmaMode::Formula)]
        mode: SigmaMode,
    },
    /// Compare the decider with the oracle on every graphic sequence of length n.
    Verify {
        /// A single length or an inclusive range such as `5..8`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = TargetArg::K6C4)]
        target: TargetArg,
        #[arg(long)]
        json: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "k6-c4")]
    K6C4,
    #[value(name = "k5-c4")]
    K5C4,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::K6C4 => Target::K6MinusC4,
            TargetArg::K5C4 => Target::K5MinusC4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Text,
    Edgelist,
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SigmaMode {
    Formula,
    Search,
    Both,
}

/// Exit status with an optional message for stderr.
struct Exit {
    code: u8,
    message: Option<String>,
}

impl Exit {
    fn ok() -> Self {
        Self {
            code: 0,
            message: None,
        }
    }
    fn no(message: impl Into<Option<String>>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
    fn usage(message: String) -> Self {
        Self {
            code: 2,
            message: Some(message),
        }
    }
    fn internal(message: String) -> Self {
        Self {
            code: 3,
            message: Some(format!("internal error: {message}")),
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a length"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn parse_seq(text: &str) -> Result<DegreeSequence, Exit> {
    parse_notation(text).map_err(|e| Exit::usage(format!("cannot parse `{text}`: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn search_exit(e: SearchError) -> Exit {
    match e {
        SearchError::BoundExceeded { .. } | SearchError::TooShort { .. } => {
            Exit::usage(e.to_string())
        }
        SearchError::NotGraphic(_) | SearchError::Rejected { .. } => Exit::no(e.to_string()),
        SearchError::EmbeddingFailed(_) => Exit::internal(e.to_string()),
    }
}

fn check_graphic(text: &str) -> Result<Exit, Exit> {
    let s = parse_seq(text)?;
    let eg = s.is_graphic();
    let layoff = s.is_graphic_by_layoff();
    if eg != layoff {
        return Err(Exit::internal(format!(
            "graphicality tests disagree on ({s}): erdos-gallai={eg} layoff={layoff}"
        )));
    }
    println!("{}", if eg { "graphic" } else { "not graphic" });
    println!("normalized: {}", s.render());
    println!("sigma: {}", s.sigma());
    println!("erdos-gallai: {}", yes_no(eg));
    println!("layoff: {}", yes_no(layoff));
    Ok(if eg { Exit::ok() } else { Exit::no(None) })
}

fn check(text: &str, target: Target, format: CheckFormat) -> Result<Exit, Exit> {
    let s = parse_seq(text)?;
    let v = target.decide(&s);
    match format {
        CheckFormat::Text => {
            println!("{}", yes_no(v.is_potential()));
            println!("sequence: {}", s.render());
            println!("target: {target}");
            println!("reason: {}", v.reason.code());
            println!("explain: {}", v.explain());
        }
        CheckFormat::Json => {
            let out = json!({
                "input": text,
                "normalized": s.render(),
                "target": target.slug(),
                "graphic": s.is_graphic(),
                "potential": v.is_potential(),
                "reason": v.reason.code(),
                "matched_exception": v.matched_exception,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
    Ok(if v.is_potential() {
        Exit::ok()
    } else {
        Exit::no(None)
    })
}

struct Realized {
    graph: Graph,
    hosts: Vec<usize>,
    annotations: Vec<String>,
    witness: serde_json::Value,
}

fn realize_k6c4(s: &DegreeSequence) -> Result<Realized, Exit> {
    let mut cert = realize_with_k6c4(s).map_err(search_exit)?;
    if !cert.revalidate(s) {
        return Err(Exit::internal(format!(
            "certificate for ({s}) does not revalidate"
        )));
    }
    Ok(Realized {
        hosts: cert.hosts().to_vec(),
        annotations: cert.annotations(),
        witness: json!({ "hubs": cert.witness.hubs, "pairs": cert.witness.pairs }),
        graph: cert.graph,
    })
}

fn realize_pattern(s: &DegreeSequence, target: Target, bound: usize) -> Result<Realized, Exit> {
    let verdict = target.decide(s);
    if !verdict.is_potential() {
        return Err(rejected(s, &verdict));
    }
    let pattern = target.pattern();
    let graph = oracle_decide_pattern(s, &pattern, bound)
        .map_err(search_exit)?
        .ok_or_else(|| Exit::internal(format!("oracle found no {target} realization of ({s})")))?;
    let map = find_pattern(&graph, &pattern)
        .filter(|_| graph.degree_sequence() == *s)
        .ok_or_else(|| Exit::internal(format!("realization of ({s}) does not revalidate")))?;
    let mut hosts = map.clone();
    hosts.sort_unstable();
    Ok(Realized {
        annotations: vec![
            format!("{target} hosts: {hosts:?}"),
            format!("pattern vertex -> host: {map:?}"),
        ],
        witness: json!({ "map": map }),
        hosts,
        graph,
    })
}

fn rejected(s: &DegreeSequence, v: &Verdict) -> Exit {
    Exit::no(format!("no: ({s}) {} [{}]", v.explain(), v.reason.code()))
}

fn realize(text: &str, target: Target, format: GraphFormat, bound: usize) -> Result<Exit, Exit> {
    let s = parse_seq(text)?;
    let r = match target {
        Target::K6MinusC4 => {
            let v = target.decide(&s);
            if !v.is_potential() {
                return Err(rejected(&s, &v));
            }
            realize_k6c4(&s)?
        }
        Target::K5MinusC4 => realize_pattern(&s, target, bound)?,
    };
    let g6 = encode_graph6(&r.graph).map_err(|e| Exit::internal(e.to_string()))?;
    match format {
        GraphFormat::Text => {
            println!(
                "realization of ({}): {} vertices, {} edges",
                s.render(),
                r.graph.n(),
                r.graph.edge_count()
            );
            for a in &r.annotations {
                println!("{a}");
            }
            println!("graph6: {g6}");
            let edges: Vec<String> = r.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("edges: {}", edges.join(" "));
        }
        GraphFormat::Edgelist => print!("{}", write_edge_list(&r.graph, &r.annotations)),
        GraphFormat::Graph6 => {
            for a in &r.annotations {
                eprintln!("{a}");
            }
            println!("{g6}");
        }
        GraphFormat::Dot => {
            for a in &r.annotations {
                println!("// {a}");
            }
            print!("{}", write_dot(&r.graph, "realization", &r.hosts));
        }
        GraphFormat::Json => {
            let edges: Vec<[usize; 2]> = r.graph.edges().map(|(u, v)| [u, v]).collect();
            let out = json!({
                "sequence": s.render(),
                "target": target.slug(),
                "n": r.graph.n(),
                "edges": edges,
                "graph6": g6,
                "hosts": r.hosts,
                "witness": r.witness,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
    Ok(Exit::ok())
}

fn sigma(n: usize, target: Target, mode: SigmaMode, bound: usize) -> Result<Exit, Exit> {
    let formula = if mode == SigmaMode::Search {
        None
    } else {
        if target != Target::K6MinusC4 {
            return Err(Exit::usage(format!(
                "no closed form for {target}; use --mode search"
            )));
        }
        Some(sigma_formula_k6c4(n).map_err(|e| Exit::usage(e.to_string()))?)
    };
    let search = if mode == SigmaMode::Formula {
        None
    } else {
        eprintln!("searching all graphic sequences of length {n} ...");
        Some(sigma_search(n, target, bound).map_err(search_exit)?)
    };
    let witness = |r: &potgraph::search::SigmaSearch| {
        r.witness
            .as_ref()
            .map_or("none".to_string(), |w| format!("({w})"))
    };
    match (formula, search) {
        (Some(f), None) => println!("{f}"),
        (None, Some(r)) => println!("{}", r.sigma),
        (Some(f), Some(r)) => {
            println!("formula={f} search={} witness={}", r.sigma, witness(&r));
            if f != r.sigma {
                return Ok(Exit::no(format!(
                    "disagreement at n={n}: counterexample {}",
                    witness(&r)
                )));
            }
        }
        (None, None) => unreachable!("mode selects at least one"),
    }
    Ok(Exit::ok())
}

fn verify(
    range: RangeInclusive<usize>,
    target: Target,
    json_out: bool,
    jobs: Option<usize>,
    bound: usize,
) -> Result<Exit, Exit> {
    if *range.end() > bound {
        return Err(Exit::usage(format!(
            "n = {} exceeds the oracle bound {bound}",
            range.end()
        )));
    }
    let opts = VerifyOptions {
        oracle_bound: bound,
        jobs,
    };
    let single = range.start() == range.end();
    let mut reports = Vec::new();
    for n in range {
        eprintln!("verifying n={n} target={target} ...");
        let start = Instant::now();
        let report = verify_range(n, target, &opts).map_err(search_exit)?;
        eprintln!("n={n} done in {:.2?}", start.elapsed());
        if !json_out {
            print!("{}", report.to_table());
        }
        reports.push(report);
    }
    if json_out {
        let text = if single {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports).expect("json")
        };
        println!("{text}");
    }
    let dirty: usize = reports.iter().map(|r| r.mismatches.len()).sum();
    Ok(if dirty == 0 {
        Exit::ok()
    } else {
        Exit::no(format!("{dirty} mismatches"))
    })
}

fn run(cli: Cli) -> Result<Exit, Exit> {
    let bound = cli.oracle_bound;
    match cli.command {
        Command::CheckGraphic { sequence } => check_graphic(&sequence),
        Command::Check {
            sequence,
            target,
            format,
        } => check(&sequence, target.into(), format),
        Command::Realize {
            sequence,
            target,
            format,
        } => realize(&sequence, target.into(), format, bound),
        Command::Sigma { n, target, mode } => sigma(n, target.into(), mode, bound),
        Command::Verify {
            n,
            target,
            json,
            jobs,
        } => verify(n, target.into(), json, jobs, bound),
    }
}

fn main() -> ExitCode {
    let exit = run(Cli::parse()).unwrap_or_else(|e| e);
    if let Some(m) = exit.message {
        eprintln!("{m}");
    }
    ExitCode::from(exit.code)
}
