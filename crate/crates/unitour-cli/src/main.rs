//! Command line front end: conversions between the digraph, tree, and
//! arrangement forms, exact counting with cross-checks, enumeration, the
//! membership report, and DOT export.
//!
//! Exit codes: 0 on success, 1 on malformed input or a violated
//! precondition (with a diagnostic on stderr), 2 on usage errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use unitour::best::{explain_arborescence_criterion, satisfies_arborescence_criterion};
use unitour::counting::cross_check_count;
use unitour::parens::{add_loops, enumerate_valid, remove_loops};
use unitour::plane_tree::enumerate_two_under_one;
use unitour::{
    counting, explain_not_uniquely_eulerian, DiGraph, Edge, MarkedDigraph, ParenArrangement,
    RootedPlaneTree,
};

#[derive(Parser)]
#[command(
    name = "unitour",
    version,
    about = "Digraphs with exactly one Eulerian tour: count, convert, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct IoArgs {
    /// Input file; standard input when absent or "-"
    input: Option<PathBuf>,
    /// Output file; standard output when absent
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// Vertex count (n >= 2)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Uniquely Eulerian digraphs, via the tree bijection
    Digraphs,
    /// Uniquely Eulerian digraphs, via exhaustive edge-subset search (n <= 5)
    DigraphsSearch,
    /// Labeled plane trees with vertex 2 below vertex 1
    Trees,
    /// Valid labeled parenthesis arrangements
    Parens,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Vertex count / pair count
    #[arg(long)]
    n: usize,
    /// Which family to stream, one item per line
    #[arg(long, value_enum, default_value_t = Family::Digraphs)]
    what: Family,
    /// Defaults to text for arrangements and JSON otherwise
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; standard output when absent
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MarkArgs {
    /// Marked edge "u,v" of the loop-saturated digraph
    #[arg(long, value_parser = parse_mark)]
    mark: Edge,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct StripArgs {
    /// Delete the loops and emit the plain loopless digraph
    #[arg(long)]
    strip_loops: bool,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Cross-check the closed-form count (n-1)!*C_n/2 against enumeration
    Count(CountArgs),
    /// Stream every member of a family, one per line
    Enumerate(EnumerateArgs),
    /// Tree JSON -> digraph JSON
    Tree2digraph(IoArgs),
    /// Digraph JSON -> tree JSON
    Digraph2tree(IoArgs),
    /// Digraph JSON -> arrangement, after loop saturation, anchored at --mark
    Digraph2parens(MarkArgs),
    /// Arrangement (text or JSON) -> marked digraph JSON
    Parens2digraph(StripArgs),
    /// Report the three membership characterizations and their agreement
    Verify(VerifyArgs),
    /// Digraph JSON -> GraphViz DOT
    Dot(IoArgs),
    /// Tree JSON -> tree JSON, swapping the subtrees of the root and vertex 1
    Involution(IoArgs),
}

fn parse_mark(s: &str) -> Result<Edge, String> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,v\", got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("{x:?} is not a vertex number"))
    };
    Ok(Edge::new(parse(u)?, parse(v)?))
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("cannot read standard input")?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_digraph(io: &IoArgs) -> Result<DiGraph> {
    serde_json::from_str(&read_input(&io.input)?).context("input is not a digraph document")
}

fn read_tree(io: &IoArgs) -> Result<RootedPlaneTree> {
    serde_json::from_str(&read_input(&io.input)?).context("input is not a tree document")
}

/// Arrangements arrive either as the whitespace token text or as JSON;
/// JSON documents start with '{'.
fn read_arrangement(io: &IoArgs) -> Result<ParenArrangement> {
    let raw = read_input(&io.input)?;
    if raw.trim_start().starts_with('{') {
        serde_json::from_str(&raw).context("input is not an arrangement document")
    } else {
        ParenArrangement::parse_text(&raw).context("input is not an arrangement")
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string(value)?))
}

fn run_count(args: &CountArgs) -> Result<()> {
    let report = cross_check_count(args.n)?;
    match args.format {
        Format::Json => print!("{}", json_line(&report)?),
        Format::Text => {
            let leg = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            println!(
                "{:>3}  {:>12}  {:>10}  {:>9}  {:>10}  agree",
                "n", "expected", "search", "trees", "parens"
            );
            println!(
                "{:>3}  {:>12}  {:>10}  {:>9}  {:>10}  {}",
                report.n,
                report.expected.to_string(),
                leg(report.via_search),
                leg(report.via_trees),
                leg(report.via_parens),
                if report.agree { "yes" } else { "NO" }
            );
        }
    }
    Ok(())
}

fn run_enumerate(args: &EnumerateArgs) -> Result<()> {
    if args.what != Family::Parens && args.format == Some(Format::Text) {
        bail!("only arrangements have a text form; use --format json");
    }
    let mut out = String::new();
    match args.what {
        Family::Digraphs => {
            let mut digraphs: Vec<DiGraph> = counting::enumerate_via_trees(args.n).collect();
            digraphs.sort_unstable();
            digraphs.dedup();
            for d in digraphs {
                out.push_str(&json_line(&d)?);
            }
        }
        Family::DigraphsSearch => {
            for d in counting::enumerate_exhaustive(args.n)? {
                out.push_str(&json_line(&d)?);
            }
        }
        Family::Trees => {
            for t in enumerate_two_under_one(args.n) {
                out.push_str(&json_line(&t)?);
            }
        }
        Family::Parens => {
            let format = args.format.unwrap_or(Format::Text);
            for w in enumerate_valid(args.n) {
                match format {
                    Format::Text => {
                        out.push_str(&w.to_text());
                        out.push('\n');
                    }
                    Format::Json => out.push_str(&json_line(&w)?),
                }
            }
        }
    }
    write_output(&args.output, &out)
}

fn run_verify(args: &VerifyArgs) -> Result<()> {
    let d = read_digraph(&args.io)?;
    let by_tours = d.is_uniquely_eulerian();
    let by_paths = d.satisfies_path_cycle_criterion();
    let by_arborescences = satisfies_arborescence_criterion(&d);
    let agree = by_tours == by_paths && by_paths == by_arborescences;
    match args.format {
        Format::Json => {
            let report = serde_json::json!({
                "uniquely_eulerian": by_tours,
                "path_cycle_criterion": by_paths,
                "arborescence_criterion": by_arborescences,
                "agree": agree,
            });
            write_output(&args.io.output, &json_line(&report)?)?;
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("unique-tour definition:  {by_tours}\n"));
            if let Some(reason) = explain_not_uniquely_eulerian(&d) {
                out.push_str(&format!("  reason: {reason}\n"));
            }
            out.push_str(&format!("path/cycle criterion:    {by_paths}\n"));
            out.push_str(&format!("arborescence criterion:  {by_arborescences}\n"));
            if let Some(reason) = explain_arborescence_criterion(&d) {
                out.push_str(&format!("  reason: {reason}\n"));
            }
            out.push_str(&format!("agree:                   {agree}\n"));
            write_output(&args.io.output, &out)?;
        }
    }
    Ok(())
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Count(args) => run_count(&args),
        Command::Enumerate(args) => run_enumerate(&args),
        Command::Tree2digraph(io) => {
            let digraph = read_tree(&io)?.to_digraph()?;
            write_output(&io.output, &json_line(&digraph)?)
        }
        Command::Digraph2tree(io) => {
            let tree = RootedPlaneTree::from_digraph(&read_digraph(&io)?)?;
            write_output(&io.output, &json_line(&tree)?)
        }
        Command::Digraph2parens(args) => {
            let looped = add_loops(&read_digraph(&args.io)?)?;
            let marked = MarkedDigraph::new(looped, args.mark)?;
            let arrangement = marked.to_arrangement();
            match args.format {
                Format::Text => {
                    write_output(&args.io.output, &format!("{}\n", arrangement.to_text()))
                }
                Format::Json => write_output(&args.io.output, &json_line(&arrangement)?),
            }
        }
        Command::Parens2digraph(args) => {
            let marked = MarkedDigraph::from_arrangement(&read_arrangement(&args.io)?)?;
            if args.strip_loops {
                let stripped = remove_loops(marked.graph())?;
                write_output(&args.io.output, &json_line(&stripped)?)
            } else {
                write_output(&args.io.output, &json_line(&marked)?)
            }
        }
        Command::Verify(args) => run_verify(&args),
        Command::Dot(io) => {
            let digraph = read_digraph(&io)?;
            write_output(&io.output, &digraph.to_dot())
        }
        Command::Involution(io) => {
            let image = read_tree(&io)?.involution()?;
            write_output(&io.output, &json_line(&image)?)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
