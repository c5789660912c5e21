//! Text formats: bipartite edge lists (KONECT or plain) and partition TSVs.
//!
//! Edge lists hold one `i j [w [t]]` line per edge; lines starting with `%`
//! are comments. KONECT files number nodes from 1 and may skip ids, so ids
//! are compacted per side and the original ids kept in [`NodeIds`]. Plain
//! files use 0-based ids as-is. In either format a second comment line of
//! the form `% <edges> <n_bottom> <n_top>` declares the node counts.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, ProjectedGraph};
use crate::partition::{BipartitePartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeListFormat {
    Konect,
    #[default]
    Plain,
}

/// Original ids of the dense internal nodes, per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeIds {
    pub bottom: Vec<u64>,
    pub top: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: BipartiteGraph,
    pub ids: NodeIds,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_weight(token: &str, line: usize) -> Result<u64> {
    if let Ok(w) = token.parse::<u64>() {
        return Ok(w);
    }
    match token.parse::<f64>() {
        Ok(w) if w >= 0.0 && w.fract() == 0.0 && w < u64::MAX as f64 => Ok(w as u64),
        _ => Err(parse_err(
            line,
            format!("weight {token:?} is not a non-negative integer"),
        )),
    }
}

/// Reads `% <edges> <n_bottom> <n_top>` if the comment is shaped like one.
fn size_hint(comment: &str) -> Option<(usize, usize)> {
    let nums: Vec<usize> = comment
        .trim_start_matches('%')
        .split_whitespace()
        .map(|t| t.parse().ok())
        .collect::<Option<_>>()?;
    match nums.as_slice() {
        [_, nb, nt] => Some((*nb, *nt)),
        _ => None,
    }
}

pub fn read_edge_list<R: BufRead>(reader: R, format: EdgeListFormat) -> Result<EdgeList> {
    let mut raw = Vec::new();
    let mut hint = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('%') {
            if hint.is_none() {
                hint = size_hint(trimmed);
            }
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut id = |what: &str| -> Result<u64> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err(line_no, format!("missing {what} id")))?;
            let v: u64 = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("{what} id {tok:?} is not an integer")))?;
            if format == EdgeListFormat::Konect && v < 1 {
                return Err(parse_err(line_no, format!("{what} id must be >= 1")));
            }
            Ok(v)
        };
        let i = id("bottom")?;
        let j = id("top")?;
        let w = match tokens.next() {
            Some(tok) => parse_weight(tok, line_no)?,
            None => 1,
        };
        raw.push((i, j, w));
    }

    let (ids, edges) = match format {
        EdgeListFormat::Plain => {
            let nb = raw.iter().map(|e| e.0 as usize + 1).max().unwrap_or(0);
            let nt = raw.iter().map(|e| e.1 as usize + 1).max().unwrap_or(0);
            let (nb, nt) = hint.map_or((nb, nt), |(hb, ht)| (nb.max(hb), nt.max(ht)));
            let ids = NodeIds {
                bottom: (0..nb as u64).collect(),
                top: (0..nt as u64).collect(),
            };
            let edges: Vec<_> = raw.iter().map(|&(i, j, w)| (i as usize, j as usize, w)).collect();
            (ids, edges)
        }
        EdgeListFormat::Konect => {
            let mut bottom: BTreeSet<u64> = raw.iter().map(|e| e.0).collect();
            let mut top: BTreeSet<u64> = raw.iter().map(|e| e.1).collect();
            if let Some((hb, ht)) = hint {
                bottom.extend(1..=hb as u64);
                top.extend(1..=ht as u64);
            }
            let bottom: Vec<u64> = bottom.into_iter().collect();
            let top: Vec<u64> = top.into_iter().collect();
            let dense = |ids: &[u64], v: u64| ids.binary_search(&v).expect("id collected above");
            let edges = raw
                .iter()
                .map(|&(i, j, w)| (dense(&bottom, i), dense(&top, j), w))
                .collect();
            (NodeIds { bottom, top }, edges)
        }
    };
    let graph = BipartiteGraph::from_edges(ids.bottom.len(), ids.top.len(), edges)?;
    Ok(EdgeList { graph, ids })
}

/// Writes a plain 0-based edge list with a node-count header.
pub fn write_edge_list<W: Write>(g: &BipartiteGraph, mut sink: W) -> Result<()> {
    writeln!(sink, "% bip weighted")?;
    writeln!(sink, "% {} {} {}", g.edge_count(), g.n_bottom(), g.n_top())?;
    for (i, j, w) in g.edges() {
        writeln!(sink, "{i} {j} {w}")?;
    }
    Ok(())
}

/// Writes `i j weight` for every stored entry of a projection with `i <= j`,
/// diagonal included.
pub fn write_projection<W: Write>(g: &ProjectedGraph, mut sink: W) -> Result<()> {
    for (i, j, w) in g.entries() {
        writeln!(sink, "{i} {j} {w}")?;
    }
    Ok(())
}

/// Either kind of partition, as stored in a partition TSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionFile {
    Unipartite(Partition),
    Bipartite(BipartitePartition),
}

impl PartitionFile {
    /// Labels of the bottom (or only) node set.
    pub fn primary_labels(&self) -> &[usize] {
        match self {
            PartitionFile::Unipartite(p) => p.labels(),
            PartitionFile::Bipartite(p) => p.bottom(),
        }
    }
}

pub fn write_partition<W: Write>(p: &Partition, mut sink: W) -> Result<()> {
    for (node, label) in p.labels().iter().enumerate() {
        writeln!(sink, "{node}\t{label}")?;
    }
    Ok(())
}

/// Bottom nodes are written as `b<id>`, top nodes as `t<id>`.
pub fn write_bipartite_partition<W: Write>(p: &BipartitePartition, mut sink: W) -> Result<()> {
    for (node, label) in p.bottom().iter().enumerate() {
        writeln!(sink, "b{node}\t{label}")?;
    }
    for (node, label) in p.top().iter().enumerate() {
        writeln!(sink, "t{node}\t{label}")?;
    }
    Ok(())
}

/// Reads a partition TSV written by [`write_partition`] or
/// [`write_bipartite_partition`]. Node ids must cover `0..n` on each side.
pub fn read_partition<R: BufRead>(reader: R) -> Result<PartitionFile> {
    let mut plain: Vec<(usize, usize)> = Vec::new();
    let mut bottom = Vec::new();
    let mut top = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(node), Some(label), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(line_no, "expected `node<TAB>label`"));
        };
        let label: usize = label
            .parse()
            .map_err(|_| parse_err(line_no, format!("label {label:?} is not an integer")))?;
        let (target, digits) = match node.as_bytes()[0] {
            b'b' => (&mut bottom, &node[1..]),
            b't' => (&mut top, &node[1..]),
            _ => (&mut plain, node),
        };
        let id: usize = digits
            .parse()
            .map_err(|_| parse_err(line_no, format!("node id {node:?} is not valid")))?;
        target.push((id, label));
    }
    if !plain.is_empty() && !(bottom.is_empty() && top.is_empty()) {
        return Err(parse_err(0, "file mixes plain and side-prefixed node ids"));
    }
    let dense = |mut entries: Vec<(usize, usize)>, what: &str| -> Result<Vec<usize>> {
        entries.sort_unstable();
        for (k, &(id, _)) in entries.iter().enumerate() {
            if id != k {
                return Err(parse_err(
                    0,
                    format!("{what} node ids are not exactly 0..{}", entries.len()),
                ));
            }
        }
        Ok(entries.into_iter().map(|(_, l)| l).collect())
    };
    if bottom.is_empty() && top.is_empty() {
        Ok(PartitionFile::Unipartite(Partition::from_labels(dense(
            plain, "plain",
        )?)))
    } else {
        Ok(PartitionFile::Bipartite(BipartitePartition::from_labels(
            dense(bottom, "bottom")?,
            dense(top, "top")?,
        )))
    }
}
