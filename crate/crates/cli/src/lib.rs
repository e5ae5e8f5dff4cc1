//! Command-line front end for the total mutual-visibility toolkit.
//!
//! Four subcommands: `compute` evaluates invariants of one input graph,
//! `product` builds a graph product, `generate` writes a named family
//! member, and `verify` runs a claim suite.  Graphs travel as edge-list
//! files.  Exit codes: 0 success (and all claims pass), 1 a verification
//! claim failed, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use tmv_core::construct::{
    self, cartesian_product, corona_product, join_graph, lexicographic_product, Family,
};
use tmv_core::domination::{connected_domination_number, domination_number};
use tmv_core::graph::Graph;
use tmv_core::theorems::{
    check_instance, plan_suite, Status, Suite, SuiteConfig, SuiteReport, SuiteVerdict,
};
use tmv_core::visibility::{
    compulsory_set, convex_p3_centers, forbidden_set, mu_it, mu_t, simplicial_set, twin_partition,
};

#[derive(Parser)]
#[command(
    name = "tmv",
    version,
    about = "Exact total mutual-visibility computations on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of a connected input graph
    Compute {
        /// Edge-list file to read
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated tokens: mu_t, mu_it, C, F, S, P, gamma, gamma_c,
        /// diam, twins
        #[arg(long)]
        what: String,
        /// Emit one JSON object instead of text lines
        #[arg(long)]
        json: bool,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Combine two graphs and write the product
    Product {
        #[arg(long)]
        op: ProductOp,
        /// Edge-list file for the first factor
        #[arg(long)]
        left: PathBuf,
        /// Edge-list file for the second factor
        #[arg(long)]
        right: PathBuf,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a member of a named graph family
    Generate {
        /// One of: path, cycle, complete, star, complete_bipartite, crown,
        /// random_tree, random_connected, random_block, figure1, figure2,
        /// figure3, figure4_host
        #[arg(long)]
        family: String,
        /// Primary size (leaf count for star, block count for random_block)
        #[arg(long)]
        n: Option<usize>,
        /// Secondary size (second side for complete_bipartite, block size
        /// cap for random_block)
        #[arg(long)]
        m: Option<usize>,
        /// Seed for the random families
        #[arg(long)]
        seed: Option<u64>,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a claim suite and report verdicts
    Verify {
        /// One of: trees, cycles, figures, random, products, complete_grid,
        /// all_small
        #[arg(long)]
        suite: String,
        /// Size cap; for products it caps the product order
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the full report as JSON
        #[arg(long)]
        json: bool,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductOp {
    Cartesian,
    Lexicographic,
    Join,
    Corona,
}

/// Parses and executes one invocation.  Never panics on bad input; all
/// failures map to the exit-code contract.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests arrive as "errors" but exit cleanly.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Compute { input, what, json, threads } => compute(&input, &what, json, threads),
        Command::Product { op, left, right, out } => product(op, &left, &right, &out),
        Command::Generate { family, n, m, seed, out } => generate(&family, n, m, seed, &out),
        Command::Verify { suite, max_n, seed, json, threads } => {
            verify(&suite, max_n, seed, json, threads)
        }
    }
}

fn read_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_graph(path: &PathBuf, g: &Graph) -> anyhow::Result<()> {
    std::fs::write(path, g.to_edge_list())
        .with_context(|| format!("writing {}", path.display()))
}

fn thread_pool(threads: usize) -> anyhow::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building thread pool")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    MuT,
    MuIt,
    C,
    F,
    S,
    P,
    Gamma,
    GammaC,
    Diam,
    Twins,
}

impl Token {
    fn parse(text: &str) -> Option<Token> {
        Some(match text {
            "mu_t" => Token::MuT,
            "mu_it" => Token::MuIt,
            "C" => Token::C,
            "F" => Token::F,
            "S" => Token::S,
            "P" => Token::P,
            "gamma" => Token::Gamma,
            "gamma_c" => Token::GammaC,
            "diam" => Token::Diam,
            "twins" => Token::Twins,
            _ => return None,
        })
    }

    fn key(self) -> &'static str {
        match self {
            Token::MuT => "mu_t",
            Token::MuIt => "mu_it",
            Token::C => "C",
            Token::F => "F",
            Token::S => "S",
            Token::P => "P",
            Token::Gamma => "gamma",
            Token::GammaC => "gamma_c",
            Token::Diam => "diam",
            Token::Twins => "twins",
        }
    }
}

fn parse_what(list: &str) -> anyhow::Result<Vec<Token>> {
    let mut tokens = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let token = Token::parse(part).ok_or_else(|| anyhow!("unknown token: {part}"))?;
        if !tokens.contains(&token) {
            tokens.push(token);
        }
    }
    if tokens.is_empty() {
        bail!("--what needs at least one token");
    }
    Ok(tokens)
}

fn members(set: &tmv_core::graph::VertexSet) -> Vec<usize> {
    set.to_vec()
}

fn set_json(set: &tmv_core::graph::VertexSet) -> Value {
    json!(members(set))
}

fn valued_json(value: usize, witness: &tmv_core::graph::VertexSet) -> Value {
    let mut obj = Map::new();
    obj.insert("value".into(), json!(value));
    obj.insert("witness".into(), json!(members(witness)));
    Value::Object(obj)
}

/// Result of one `--what` token: the text line and the JSON value.
fn evaluate_token(g: &Graph, token: Token) -> anyhow::Result<(String, Value)> {
    Ok(match token {
        Token::MuT => {
            let r = mu_t(g).context("mu_t")?;
            (format!("mu_t = {} witness={}", r.value, r.witness), valued_json(r.value, &r.witness))
        }
        Token::MuIt => {
            let r = mu_it(g).context("mu_it")?;
            (
                format!("mu_it = {} witness={}", r.value, r.witness),
                valued_json(r.value, &r.witness),
            )
        }
        Token::C => {
            let s = compulsory_set(g).context("C")?;
            (format!("C = {s}"), set_json(&s))
        }
        Token::F => {
            let s = forbidden_set(g).context("F")?;
            (format!("F = {s}"), set_json(&s))
        }
        Token::S => {
            let s = simplicial_set(g);
            (format!("S = {s}"), set_json(&s))
        }
        Token::P => {
            let s = convex_p3_centers(g);
            (format!("P = {s}"), set_json(&s))
        }
        Token::Gamma => {
            let r = domination_number(g).context("gamma")?;
            (
                format!("gamma = {} witness={}", r.value, r.witness),
                valued_json(r.value, &r.witness),
            )
        }
        Token::GammaC => {
            let r = connected_domination_number(g).context("gamma_c")?;
            (
                format!("gamma_c = {} witness={}", r.value, r.witness),
                valued_json(r.value, &r.witness),
            )
        }
        Token::Diam => {
            let d = g.diameter().context("diam")?;
            (format!("diam = {d}"), json!(d))
        }
        Token::Twins => {
            let classes = twin_partition(g).classes;
            let text = if classes.is_empty() {
                "twins = (none)".to_string()
            } else {
                let mut line = String::from("twins = ");
                for (i, class) in classes.iter().enumerate() {
                    if i > 0 {
                        line.push_str(" | ");
                    }
                    let _ = write!(line, "{class}");
                }
                line
            };
            let value = json!(classes.iter().map(members).collect::<Vec<_>>());
            (text, value)
        }
    })
}

fn compute(input: &PathBuf, what: &str, json: bool, threads: usize) -> anyhow::Result<i32> {
    let tokens = parse_what(what)?;
    let g = read_graph(input)?;
    if !g.is_connected() {
        bail!("input graph is disconnected");
    }
    let pool = thread_pool(threads)?;
    let results: Vec<(Token, String, Value)> = pool.install(|| {
        tokens
            .par_iter()
            .map(|&token| evaluate_token(&g, token).map(|(line, value)| (token, line, value)))
            .collect::<anyhow::Result<Vec<_>>>()
    })?;
    if json {
        let mut obj = Map::new();
        for (token, _, value) in results {
            obj.insert(token.key().to_string(), value);
        }
        println!("{}", Value::Object(obj));
    } else {
        for (_, line, _) in results {
            println!("{line}");
        }
    }
    Ok(0)
}

fn product(op: ProductOp, left: &PathBuf, right: &PathBuf, out: &PathBuf) -> anyhow::Result<i32> {
    let g = read_graph(left)?;
    let h = read_graph(right)?;
    let combined = match op {
        ProductOp::Cartesian => cartesian_product(&g, &h),
        ProductOp::Lexicographic => lexicographic_product(&g, &h),
        ProductOp::Join => join_graph(&g, &h),
        ProductOp::Corona => corona_product(&g, &h),
    };
    write_graph(out, &combined)?;
    Ok(0)
}

fn generate(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    seed: Option<u64>,
    out: &PathBuf,
) -> anyhow::Result<i32> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| anyhow!("family {family} requires --{flag}"))
    };
    let seed = seed.unwrap_or(0);
    let spec = match family {
        "path" => Family::Path { n: need(n, "n")? },
        "cycle" => Family::Cycle { n: need(n, "n")? },
        "complete" => Family::Complete { n: need(n, "n")? },
        "star" => Family::Star { leaves: need(n, "n")? },
        "complete_bipartite" => {
            Family::CompleteBipartite { a: need(n, "n")?, b: need(m, "m")? }
        }
        "crown" => Family::Crown { n: need(n, "n")? },
        "random_tree" => Family::RandomTree { n: need(n, "n")?, seed },
        "random_connected" => Family::RandomConnected { n: need(n, "n")?, seed },
        "random_block" => {
            Family::RandomBlock { blocks: need(n, "n")?, max_block: need(m, "m")?, seed }
        }
        "figure1" => Family::Figure1,
        "figure2" => Family::Figure2,
        "figure3" => Family::Figure3,
        "figure4_host" => Family::Figure4Host,
        other => bail!("unknown family: {other}"),
    };
    let g = construct::generate(&spec).context("generating")?;
    write_graph(out, &g)?;
    Ok(0)
}

fn verify(
    suite: &str,
    max_n: Option<usize>,
    seed: u64,
    json: bool,
    threads: usize,
) -> anyhow::Result<i32> {
    let config = SuiteConfig { suite: Suite::parse(suite).context("selecting suite")?, max_n, seed };
    let started = Instant::now();
    let instances = plan_suite(&config).context("planning suite")?;
    let pool = thread_pool(threads)?;
    // Instance order from the planner is the report order, independent of
    // how the pool schedules the work.
    let per_instance: Vec<_> = pool.install(|| {
        instances
            .par_iter()
            .map(|instance| check_instance(instance))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut verdicts = Vec::new();
    for (instance, claims) in instances.iter().zip(per_instance) {
        for claim in claims {
            verdicts.push(SuiteVerdict::from_claim(instance.label.clone(), claim));
        }
    }
    let report = SuiteReport {
        suite: config.suite.name().to_string(),
        seed: config.seed,
        instances: instances.len(),
        verdicts,
        duration_ms: started.elapsed().as_millis() as u64,
    };
    let failures = report.failures();
    if json {
        println!("{}", serde_json::to_string(&report).context("serializing report")?);
    } else {
        for v in report.verdicts.iter().filter(|v| v.status == Status::Fail) {
            println!(
                "FAIL instance={} claim={} lhs={} rhs={} note={}",
                v.instance, v.claim, v.lhs, v.rhs, v.note
            );
            if let Some(graph) = &v.graph {
                print!("{graph}");
            }
        }
        println!(
            "suite={} seed={} instances={} pass={} fail={} not_applicable={} duration_ms={}",
            report.suite,
            report.seed,
            report.instances,
            report.count(Status::Pass),
            failures,
            report.count(Status::NotApplicable),
            report.duration_ms
        );
    }
    Ok(if failures > 0 { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn what_list_parses_and_dedups() {
        let tokens = parse_what("mu_t, C,C ,diam").unwrap();
        assert_eq!(tokens, vec![Token::MuT, Token::C, Token::Diam]);
        assert!(parse_what("mu_t,bogus").is_err());
        assert!(parse_what(" , ").is_err());
    }

    #[test]
    fn token_round_trip() {
        for token in [
            Token::MuT,
            Token::MuIt,
            Token::C,
            Token::F,
            Token::S,
            Token::P,
            Token::Gamma,
            Token::GammaC,
            Token::Diam,
            Token::Twins,
        ] {
            assert_eq!(Token::parse(token.key()), Some(token));
        }
    }

    #[test]
    fn evaluate_token_formats() {
        let g = construct::figure2();
        let (line, value) = evaluate_token(&g, Token::MuT).unwrap();
        assert_eq!(line, "mu_t = 4 witness={0, 3, 6, 8}");
        assert_eq!(value, json!({"value": 4, "witness": [0, 3, 6, 8]}));
        let (line, _) = evaluate_token(&g, Token::F).unwrap();
        assert_eq!(line, "F = {1, 2, 4, 5, 7, 9, 10}");
        let (line, _) = evaluate_token(&g, Token::Diam).unwrap();
        assert_eq!(line, "diam = 6");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["tmv", "bogus"]), 2);
        assert_eq!(run(["tmv", "compute", "--what", "mu_t"]), 2);
        assert_eq!(run(["tmv", "--help"]), 0);
    }
}
