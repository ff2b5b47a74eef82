//! `lly`: exact Lin-Lu-Yau curvature from the command line.
//!
//! Exit codes: 0 on a positive outcome (positively curved, classification
//! matched, no violations), 1 on a negative outcome, 2 on any error.

mod input;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lly_core::classify::{
    self, classify_theorem_15, connected_corpus, named_corpus, VerificationReport, MAX_ENUMERATION_N,
};
use lly_core::curvature::curvature_report;
use lly_core::graph::{emit_edgelist, emit_graph6, Graph};

#[derive(Parser)]
#[command(name = "lly", version, about = "Exact Lin-Lu-Yau curvature on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature of every edge of one connected graph.
    Curvature {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        output: OutputFormat,
        /// Add an approximate decimal column with this many digits.
        #[arg(long, value_name = "DIGITS")]
        decimal: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Enumerate candidates up to `--max-n` vertices and keep the positively
    /// curved ones.
    Classify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        output: OutputFormat,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// graph6 corpus, one graph per line. Defaults to every connected
        /// graph on at most six vertices plus the named families.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Largest order searched by theorem14 and theorem15.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print a named graph.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Transcode a graph between graph6 and edge list.
    Convert {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_enum)]
        from: GraphFormat,
        #[arg(long, value_enum)]
        to: GraphFormat,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long, value_name = "PATH", conflicts_with = "family", required_unless_present = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    param: Option<usize>,
    /// Format of `--input`.
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemma31,
    Lemma32,
    Lemma33,
    Lemma21,
    Theorem14,
    Theorem15,
    Pendant,
    Duality,
    Oracle,
}

/// Outcome of a successful run.
enum Verdict {
    Positive,
    Negative,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Positive
        } else {
            Verdict::Negative
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("CURV_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .with_context(|| format!("CURV_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::Curvature { source, output, decimal, out } => {
            let graph = match (&source.input, &source.family) {
                (Some(path), _) => input::read_graph(path, source.format)?,
                (None, Some(name)) => input::named_graph(name, source.param)?,
                (None, None) => bail!("either --input or --family is required"),
            };
            let report = curvature_report(&graph)?;
            let text = match output {
                OutputFormat::Table => render::report_table(&report, decimal),
                OutputFormat::Json => render::report_json(&report, decimal)?,
                OutputFormat::Csv => render::report_csv(&report, decimal),
            };
            emit(out, &text)?;
            Ok(report.positively_curved.into())
        }
        Command::Classify { max_n, output, out } => {
            let result = classify_theorem_15(max_n)?;
            let text = match output {
                OutputFormat::Json => render::classification_json(&result)?,
                _ => render::classification_table(&result),
            };
            emit(out, &text)?;
            Ok(result.matched_known_set.into())
        }
        Command::Verify { suite, input, max_n, out } => {
            let (report, extra) = verify(suite, input, max_n)?;
            let mut text = render::verification_table(&report);
            text.push_str(&extra);
            emit(out, &text)?;
            Ok(report.passed().into())
        }
        Command::Family { name, param, format, out } => {
            let graph = input::named_graph(&name, param)?;
            emit(out, &write_graph(&graph, format))?;
            Ok(Verdict::Positive)
        }
        Command::Convert { input, from, to, out } => {
            let graph = input::read_graph(&input, from)?;
            emit(out, &write_graph(&graph, to))?;
            Ok(Verdict::Positive)
        }
    }
}

fn verify(suite: Suite, corpus_path: Option<PathBuf>, max_n: usize) -> Result<(VerificationReport, String)> {
    if !(3..=MAX_ENUMERATION_N).contains(&max_n) {
        bail!("--max-n must lie in 3..={MAX_ENUMERATION_N}");
    }
    let corpus = || -> Result<Vec<Graph>> {
        match &corpus_path {
            Some(path) => input::read_corpus(path),
            None => {
                let mut graphs = connected_corpus(6)?;
                graphs.extend(named_corpus());
                Ok(graphs)
            }
        }
    };
    let report = match suite {
        Suite::Lemma31 => classify::verify_lemma_31(&corpus()?)?,
        Suite::Lemma32 => classify::verify_lemma_32(&corpus()?)?,
        Suite::Lemma33 => classify::verify_lemma_33(&corpus()?)?,
        Suite::Lemma21 => classify::verify_edge_reduction(&corpus()?)?,
        Suite::Duality => classify::verify_duality(&corpus()?)?,
        Suite::Oracle => classify::verify_oracle(&corpus()?)?,
        Suite::Pendant => classify::verify_pendant_corollary()?,
        Suite::Theorem14 => {
            let bound = classify::verify_theorem_14(max_n)?;
            let extra = format!("max_degree {}\nattained_by {}\n", bound.max_degree, bound.attained_by.join(" "));
            return Ok((bound.verification, extra));
        }
        Suite::Theorem15 => {
            let (result, report) = classify::verify_theorem_15(max_n)?;
            return Ok((report, render::classification_table(&result)));
        }
    };
    Ok((report, String::new()))
}

fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", emit_graph6(g)),
        GraphFormat::Edgelist => emit_edgelist(g),
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
