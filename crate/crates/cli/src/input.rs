use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use lly_core::graph::{family, parse_edgelist, parse_graph6_lines, Graph};

use crate::GraphFormat;

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Exactly one graph from a file.
pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = read_text(path)?;
    match format {
        GraphFormat::Edgelist => Ok(parse_edgelist(&text).with_context(|| format!("in {}", path.display()))?),
        GraphFormat::Graph6 => {
            let mut graphs = parse_graph6_lines(&text).with_context(|| format!("in {}", path.display()))?;
            match graphs.len() {
                1 => Ok(graphs.remove(0)),
                0 => bail!("{} contains no graph", path.display()),
                k => bail!("{} contains {k} graphs, expected one", path.display()),
            }
        }
    }
}

/// A graph6 corpus, one graph per line.
pub fn read_corpus(path: &Path) -> Result<Vec<Graph>> {
    let text = read_text(path)?;
    let graphs = parse_graph6_lines(&text).with_context(|| format!("in {}", path.display()))?;
    if let Some(i) = graphs.iter().position(|g| !g.is_connected()) {
        bail!("graph {} of {} is disconnected", i + 1, path.display());
    }
    Ok(graphs)
}

pub fn named_graph(name: &str, param: Option<usize>) -> Result<Graph> {
    Ok(family(name, param)?)
}
