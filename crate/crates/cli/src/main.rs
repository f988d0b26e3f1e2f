mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_clans::richardson::{clan_to_pair, classify_pair, pair_to_clan, u_of_clan, v_of_clan};
use schubert_clans::tables::TABLES;
use schubert_clans::{
    schubert_product, verify_exhaustive, verify_sample, CartanType, Clan, ConstantError, Exec,
    PreparedPair, SignedPermutation, VerifyReport, WeakOrderGraph, WeylGroup, Word,
};

use crate::cache::Cache;

#[derive(Parser)]
#[command(
    name = "schubert-clans",
    version,
    about = "Schubert structure constants in types C and D for pairs of signed shuffles"
)]
struct Cli {
    /// Directory for cached oracle data. Nothing is cached when unset.
    #[arg(long, global = true, env = "SCHUBERT_CLANS_CACHE")]
    cache_dir: Option<PathBuf>,

    /// Run every computation on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one structure constant c_{u,v}^w.
    Constant(ConstantArgs),
    /// Expand the product S_u · S_v.
    Product(ProductArgs),
    /// Clan utilities.
    #[command(subcommand)]
    Clan(ClanCommand),
    /// Print the weak order graph of the orbit clans.
    Graph(GraphArgs),
    /// Recompute the built-in reference tables and report any difference.
    Tables,
    /// Compare the rules with the divided-difference oracle.
    Verify(VerifyArgs),
}

#[derive(Args, Clone, Copy)]
struct GroupArgs {
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    ty: CartanType,
    #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
    rank: u16,
}

impl GroupArgs {
    fn group(self) -> Result<WeylGroup> {
        Ok(WeylGroup::new(self.ty, self.rank.into())?)
    }
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Signed one-line image, e.g. -4,1,2,3.
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
}

impl PairArgs {
    fn parse(&self) -> Result<(WeylGroup, SignedPermutation, SignedPermutation)> {
        let g = self.group.group()?;
        let u = g.parse_element(&self.u).context("parsing --u")?;
        let v = g.parse_element(&self.v).context("parsing --v")?;
        Ok((g, u, v))
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetArgs {
    /// w as a reduced word in the simple reflections, e.g. 3,2,1,4,3,2,1.
    #[arg(long = "w", visible_alias = "w-word")]
    word: Option<String>,
    /// w as a signed one-line image, e.g. -2,1,3.
    #[arg(long = "w-image", allow_hyphen_values = true)]
    image: Option<String>,
}

#[derive(Args)]
struct ConstantArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[command(flatten)]
    target: TargetArgs,
    /// Compute the constant with the divided-difference oracle instead.
    /// Works for any pair.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct ProductArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// List every w of the right length with its clan, not only nonzero terms.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum ClanCommand {
    /// Print the canonical form of a clan.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
    /// Report the clan predicates.
    Check {
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
    /// The permutation u(γ) of a clan avoiding (1,2,1,2).
    UOf {
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
    /// The permutation v(γ) of a clan avoiding (1,2,1,2).
    VOf {
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
    /// The clan of a pair of signed shuffles.
    OfPair(PairArgs),
    /// The pair of signed shuffles of an orbit clan.
    Pair {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
        ty: CartanType,
        #[arg(allow_hyphen_values = true)]
        clan: String,
    },
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
    format: GraphFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
    exhaustive: bool,
    /// Number of random triples to check.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 2024, requires = "sample")]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Text,
    Json,
    Dot,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|_| format!("expected C or D, got {s:?}"))
}

/// Exit status for an input the rules do not cover.
const UNSUPPORTED: u8 = 2;

enum Outcome {
    Done,
    Unsupported(String),
    Failed(String),
}

fn main() -> ExitCode {
    // Usage errors exit with 1, keeping 2 for unsupported inputs.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let cache = cli.cache_dir.as_deref().map(Cache::new);
    match run(cli.command, exec, cache.as_ref()) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Unsupported(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(UNSUPPORTED)
        }
        Ok(Outcome::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, exec: Exec, cache: Option<&Cache>) -> Result<Outcome> {
    match command {
        Command::Constant(args) => constant(args, cache),
        Command::Product(args) => product(args, exec),
        Command::Clan(cmd) => clan(cmd),
        Command::Graph(args) => {
            let graph = WeakOrderGraph::build(args.group.group()?, exec);
            match args.format {
                GraphFormat::Text => print_graph(&graph),
                GraphFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&graph.to_json())?)
                }
                GraphFormat::Dot => print!("{}", graph.export_dot()),
            }
            Ok(Outcome::Done)
        }
        Command::Tables => tables(),
        Command::Verify(args) => verify(args, exec, cache),
    }
}

/// Maps rule errors that mean "not covered" to exit status 2.
fn covered<T>(result: Result<T, ConstantError>) -> Result<Result<T, Outcome>> {
    match result {
        Ok(v) => Ok(Ok(v)),
        Err(e @ (ConstantError::Unsupported { .. } | ConstantError::NotAnOrbitClan { .. })) => {
            Ok(Err(Outcome::Unsupported(e.to_string())))
        }
        Err(e) => Err(e.into()),
    }
}

fn constant(args: ConstantArgs, cache: Option<&Cache>) -> Result<Outcome> {
    let (g, u, v) = args.pair.parse()?;
    let w = match (&args.target.word, &args.target.image) {
        (Some(word), _) => {
            let word: Word = word.parse().context("parsing --w")?;
            g.evaluate_reduced(&word).context("evaluating --w")?
        }
        (None, Some(image)) => g.parse_element(image).context("parsing --w-image")?,
        (None, None) => bail!("one of --w or --w-image is required"),
    };
    if args.oracle {
        if u.length() + v.length() != w.length() {
            println!("0");
            return Ok(Outcome::Done);
        }
        let oracle = match cache {
            Some(c) => c.oracle(g)?,
            None => schubert_clans::Oracle::shared(g)?,
        };
        println!("{}", oracle.constant(&u, &v, &w)?);
        return Ok(Outcome::Done);
    }
    let pair = match covered(PreparedPair::new(&u, &v))? {
        Ok(p) => p,
        Err(out) => return Ok(out),
    };
    match covered(pair.constant(&w))? {
        Ok(c) => println!("{c}"),
        Err(out) => return Ok(out),
    }
    Ok(Outcome::Done)
}

fn product(args: ProductArgs, exec: Exec) -> Result<Outcome> {
    let (_, u, v) = args.pair.parse()?;
    if args.table {
        let rows = match covered(schubert_clans::constants::product_table(&u, &v))? {
            Ok(rows) => rows,
            Err(out) => return Ok(out),
        };
        match args.format {
            Format::Text => {
                for r in &rows {
                    println!("{}\t{}\t{}\t{}", r.word, r.w, r.clan, r.coeff);
                }
            }
            Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        }
        return Ok(Outcome::Done);
    }
    let p = match covered(schubert_product(&u, &v, exec))? {
        Ok(p) => p,
        Err(out) => return Ok(out),
    };
    match args.format {
        Format::Text => {
            for (w, c) in &p.terms {
                println!("{c}\t{w}\t{}", w.reduced_word());
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&p.to_json())?),
    }
    Ok(Outcome::Done)
}

fn parse_clan(text: &str) -> Result<Clan> {
    text.parse()
        .with_context(|| format!("parsing clan {text:?}"))
}

fn clan(cmd: ClanCommand) -> Result<Outcome> {
    match cmd {
        ClanCommand::Normalize { clan } => println!("{}", parse_clan(&clan)?),
        ClanCommand::Check { clan } => {
            let c = parse_clan(&clan)?;
            let yes = |b: bool| if b { "yes" } else { "no" };
            println!("clan: {c}");
            println!("avoids 1,2,1,2: {}", yes(c.avoids_1212()));
            println!("skew-symmetric: {}", yes(c.is_skew_symmetric()));
            println!("type D: {}", yes(c.is_type_d()));
        }
        ClanCommand::UOf { clan } => println!("{}", u_of_clan(&parse_clan(&clan)?)?),
        ClanCommand::VOf { clan } => println!("{}", v_of_clan(&parse_clan(&clan)?)?),
        ClanCommand::OfPair(args) => {
            let (_, u, v) = args.parse()?;
            let Some(pair) = classify_pair(&u, &v) else {
                return Ok(Outcome::Unsupported(format!(
                    "unsupported pair: ({u}, {v}) is not a pair of signed shuffles"
                )));
            };
            println!("{}", pair_to_clan(&pair)?);
        }
        ClanCommand::Pair { ty, clan } => {
            let pair = clan_to_pair(ty, &parse_clan(&clan)?)?;
            println!("u = {}", pair.u);
            println!("v = {}", pair.v);
        }
    }
    Ok(Outcome::Done)
}

fn print_graph(graph: &WeakOrderGraph) {
    let v = graph.vertices();
    println!(
        "{}: {} orbit clans, {} edges, {} double, top {}",
        graph.group(),
        v.len(),
        graph.edges().len(),
        graph.double_edge_count(),
        graph.top()
    );
    for e in graph.edges() {
        let mark = if e.double { " (double)" } else { "" };
        println!("{} -> {} [s{}]{mark}", v[e.src], v[e.dst], e.label);
    }
}

fn tables() -> Result<Outcome> {
    let mut failed = 0;
    for t in &TABLES {
        let (u, v) = t.pair();
        let nonzero = t.rows.iter().filter(|r| r.coeff != 0).count();
        let diffs = t.compare()?;
        let status = if diffs.is_empty() { "ok" } else { "MISMATCH" };
        println!(
            "{} u={u} v={v}: {} rows, {nonzero} nonzero: {status}",
            t.group,
            t.rows.len()
        );
        for d in &diffs {
            println!("  {d}");
        }
        failed += usize::from(!diffs.is_empty());
    }
    Ok(if failed == 0 {
        Outcome::Done
    } else {
        Outcome::Failed(format!("{failed} table(s) differ"))
    })
}

fn verify(args: VerifyArgs, exec: Exec, cache: Option<&Cache>) -> Result<Outcome> {
    let g = args.group.group()?;
    if g.rank() > 4 {
        bail!("verification supports rank at most 4");
    }
    if let Some(c) = cache {
        c.oracle(g)?;
    }
    let report = match args.sample {
        Some(n) => verify_sample(g, n, args.seed, exec)?,
        None => verify_exhaustive(g, exec)?,
    };
    match args.format {
        Format::Text => print_report(g, &report),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report_json(&report))?),
    }
    Ok(if report.is_clean() {
        Outcome::Done
    } else {
        Outcome::Failed(format!(
            "{} mismatches, {} uncovered pairs",
            report.mismatches.len(),
            report.uncovered.len()
        ))
    })
}

fn print_report(g: WeylGroup, r: &VerifyReport) {
    println!(
        "{g}: {} triples, {} nonzero, {} mismatches, {} uncovered pairs",
        r.triples,
        r.nonzero,
        r.mismatches.len(),
        r.uncovered.len()
    );
    for m in &r.mismatches {
        println!(
            "mismatch u={} v={} w={}: rule {} oracle {}",
            m.u, m.v, m.w, m.rule, m.oracle
        );
    }
    for (u, v) in &r.uncovered {
        println!("uncovered u={u} v={v}");
    }
}

fn report_json(r: &VerifyReport) -> serde_json::Value {
    serde_json::json!({
        "triples": r.triples,
        "nonzero": r.nonzero,
        "mismatches": r.mismatches.iter().map(|m| serde_json::json!({
            "u": m.u.to_string(),
            "v": m.v.to_string(),
            "w": m.w.to_string(),
            "rule": m.rule,
            "oracle": m.oracle.to_string(),
        })).collect::<Vec<_>>(),
        "uncovered": r.uncovered.iter().map(|(u, v)| serde_json::json!({
            "u": u.to_string(),
            "v": v.to_string(),
        })).collect::<Vec<_>>(),
    })
}
