//! Edge-list and graph6 readers, and a graph6 writer.
//!
//! Edge-list: a header line `n m`, then `m` lines `u v` with 1-based
//! vertices. `#` starts a comment; blank lines are skipped. A corpus is a
//! sequence of such blocks. graph6: one graph per line, as in nauty's
//! `formats.txt`.

use super::{Graph, RawGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
    /// Edge-list when the first data line holds two integers, graph6 otherwise.
    Auto,
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(p) => &line[..p],
            None => line,
        };
        let line = line.trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn resolve_format(text: &str, format: GraphFormat) -> GraphFormat {
    match format {
        GraphFormat::Auto => {
            let first = data_lines(text).next().map(|(_, l)| l).unwrap_or("");
            let tokens: Vec<&str> = first.split_whitespace().collect();
            if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<i64>().is_ok()) {
                GraphFormat::EdgeList
            } else {
                GraphFormat::Graph6
            }
        }
        f => f,
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(i64, i64)> {
    let mut it = line.split_whitespace();
    let err = || Error::Parse {
        line: line_no,
        msg: format!("expected {what}, found {line:?}"),
    };
    let a = it.next().ok_or_else(err)?.parse::<i64>().map_err(|_| err())?;
    let b = it.next().ok_or_else(err)?.parse::<i64>().map_err(|_| err())?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok((a, b))
}

fn parse_edge_blocks(text: &str, single: bool) -> Result<Vec<RawGraph>> {
    let mut lines = data_lines(text).peekable();
    let mut graphs = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let (n, m) = parse_pair(line_no, header, "header \"n m\"")?;
        if n < 0 || m < 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("negative count in header {header:?}"),
            });
        }
        let n = n as usize;
        if n > u16::MAX as usize - 1 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("too many vertices: {n}"),
            });
        }
        let mut edges = Vec::with_capacity(m as usize);
        for _ in 0..m {
            let (ln, l) = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: format!("header announces {m} edges but input ends early"),
            })?;
            let (u, v) = parse_pair(ln, l, "edge \"u v\"")?;
            for x in [u, v] {
                if x < 1 || x as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            edges.push((u as u16, v as u16));
        }
        graphs.push(RawGraph::new(n, edges)?);
        if single {
            if let Some((ln, l)) = lines.next() {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unexpected trailing line {l:?}"),
                });
            }
        }
    }
    Ok(graphs)
}

pub fn parse_edge_list(text: &str) -> Result<RawGraph> {
    let mut graphs = parse_edge_blocks(text, true)?;
    graphs.pop().ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })
}

pub fn parse_graph6(line: &str) -> Result<RawGraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
        }
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        (
            (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]),
            &bytes[4..],
        )
    } else if bytes.len() >= 8 {
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | six(b);
        }
        (n, &bytes[8..])
    } else {
        return Err(Error::Graph6("truncated size prefix".into()));
    };
    if n >= u16::MAX as usize {
        return Err(Error::Graph6(format!("{n} vertices is too many")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "body has {} bytes but a graph on {n} vertices needs {expected}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i as u16 + 1, j as u16 + 1));
            }
            k += 1;
        }
    }
    RawGraph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as u16 {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<RawGraph> {
    match resolve_format(text, format) {
        GraphFormat::Graph6 => {
            let mut lines = data_lines(text);
            let (_, line) = lines.next().ok_or(Error::Graph6("empty input".into()))?;
            if let Some((ln, _)) = lines.next() {
                return Err(Error::Parse {
                    line: ln,
                    msg: "expected a single graph6 line".into(),
                });
            }
            parse_graph6(line)
        }
        _ => parse_edge_list(text),
    }
}

/// Reads every graph in a corpus file.
pub fn parse_corpus(text: &str, format: GraphFormat) -> Result<Vec<RawGraph>> {
    match resolve_format(text, format) {
        GraphFormat::Graph6 => data_lines(text)
            .map(|(ln, line)| {
                parse_graph6(line).map_err(|e| Error::Parse {
                    line: ln,
                    msg: e.to_string(),
                })
            })
            .collect(),
        _ => parse_edge_blocks(text, false),
    }
}
