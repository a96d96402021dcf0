use std::io::Read;
use std::path::Path;

use anyhow::Context;
use chromhom_core::graph::{normalize, parse_corpus, parse_graph, GraphFormat};
use chromhom_core::{Graph, NormalizationReport, Partition};
use clap::ValueEnum;

use crate::exit::Failure;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    #[default]
    Auto,
    EdgeList,
    Graph6,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Auto => GraphFormat::Auto,
            InputFormat::EdgeList => GraphFormat::EdgeList,
            InputFormat::Graph6 => GraphFormat::Graph6,
        }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")
            .map_err(Failure::input)?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::input)
}

pub fn read_graph(path: &Path, format: InputFormat) -> Result<(Graph, NormalizationReport), Failure> {
    let text = read_text(path)?;
    let raw = parse_graph(&text, format.into())
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::input)?;
    Ok(normalize(&raw))
}

pub fn read_corpus(path: &Path, format: InputFormat) -> Result<Vec<(Graph, NormalizationReport)>, Failure> {
    let text = read_text(path)?;
    let raws = parse_corpus(&text, format.into())
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::input)?;
    Ok(raws.iter().map(normalize).collect())
}

/// Shapes `(2^k, 1^(n-2k))` to scan. An explicit `k` must fit; the default
/// `k = 2` and the full sweep quietly yield nothing on graphs too small.
pub fn shapes_for(n: usize, k: Option<usize>, all: bool) -> Result<Vec<Partition>, Failure> {
    let ks: Vec<usize> = match (k, all) {
        (_, true) => (2..=n / 2).collect(),
        (Some(k), false) => {
            if k == 0 || 2 * k > n {
                return Err(Failure::input(anyhow::anyhow!(
                    "shape k = {k} needs 1 <= k <= n/2, but n = {n}"
                )));
            }
            vec![k]
        }
        (None, false) => (2 * 2 <= n).then_some(2).into_iter().collect(),
    };
    ks.into_iter()
        .map(|k| Partition::two_column(n, k).map_err(Failure::from))
        .collect()
}
