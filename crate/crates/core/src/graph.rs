//! Bipartite multigraphs, their weighted one-mode projections, and the
//! partition-induced (aggregated) graphs used between Louvain levels.
//!
//! All weights are integer multiplicities. Projections keep their diagonal by
//! default: `A_ii = Σ_m B_im²`, so the projected total weight `2E` equals
//! `Σ_m d_m²`. [`SelfLoops::Drop`] gives the loop-free projection that common
//! graph libraries build instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{BipartitePartition, Partition};

/// Which node set of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Bottom,
    Top,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Bottom => Side::Top,
            Side::Top => Side::Bottom,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Bottom => "bottom",
            Side::Top => "top",
        }
    }
}

/// Sparse weighted rows, each sorted by neighbour id with no duplicates.
type Rows = Vec<Vec<(usize, u64)>>;

fn rows_from_triples(n: usize, triples: impl IntoIterator<Item = (usize, usize, u64)>) -> Rows {
    let mut rows: Rows = vec![Vec::new(); n];
    for (i, j, w) in triples {
        rows[i].push((j, w));
    }
    for row in &mut rows {
        row.sort_unstable_by_key(|&(j, _)| j);
        row.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        row.retain(|&(_, w)| w > 0);
    }
    rows
}

/// Dense scratch accumulator that remembers which slots it touched.
struct SparseAccumulator {
    values: Vec<u64>,
    touched: Vec<usize>,
}

impl SparseAccumulator {
    fn new(n: usize) -> Self {
        SparseAccumulator {
            values: vec![0; n],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, slot: usize, w: u64) {
        if self.values[slot] == 0 {
            self.touched.push(slot);
        }
        self.values[slot] += w;
    }

    fn drain_sorted(&mut self) -> Vec<(usize, u64)> {
        self.touched.sort_unstable();
        let out = self.touched.iter().map(|&s| (s, self.values[s])).collect();
        for &s in &self.touched {
            self.values[s] = 0;
        }
        self.touched.clear();
        out
    }
}

/// Bipartite multigraph between `n_bottom` bottom and `n_top` top nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    bottom_adj: Rows,
    top_adj: Rows,
    bottom_degrees: Vec<u64>,
    top_degrees: Vec<u64>,
    total: u64,
}

impl BipartiteGraph {
    /// Builds a graph from `(bottom, top, multiplicity)` triples. Repeated
    /// pairs accumulate; zero multiplicities are dropped.
    pub fn from_edges(
        n_bottom: usize,
        n_top: usize,
        edges: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let mut triples = Vec::new();
        for (i, j, w) in edges {
            if i >= n_bottom {
                return Err(Error::NodeOutOfRange {
                    side: "bottom",
                    id: i,
                    size: n_bottom,
                });
            }
            if j >= n_top {
                return Err(Error::NodeOutOfRange {
                    side: "top",
                    id: j,
                    size: n_top,
                });
            }
            triples.push((i, j, w));
        }
        let bottom_adj = rows_from_triples(n_bottom, triples.iter().copied());
        let top_adj = rows_from_triples(n_top, triples.iter().map(|&(i, j, w)| (j, i, w)));
        let degrees = |rows: &Rows| -> Vec<u64> { rows.iter().map(|r| r.iter().map(|&(_, w)| w).sum()).collect() };
        let bottom_degrees = degrees(&bottom_adj);
        let top_degrees = degrees(&top_adj);
        let total = bottom_degrees.iter().sum();
        Ok(BipartiteGraph {
            bottom_adj,
            top_adj,
            bottom_degrees,
            top_degrees,
            total,
        })
    }

    pub fn empty(n_bottom: usize, n_top: usize) -> Self {
        Self::from_edges(n_bottom, n_top, []).expect("no edges to validate")
    }

    pub fn n_bottom(&self) -> usize {
        self.bottom_adj.len()
    }

    pub fn n_top(&self) -> usize {
        self.top_adj.len()
    }

    pub fn node_count(&self, side: Side) -> usize {
        match side {
            Side::Bottom => self.n_bottom(),
            Side::Top => self.n_top(),
        }
    }

    /// Total multiplicity `F`.
    pub fn total_weight(&self) -> u64 {
        self.total
    }

    pub fn bottom_degrees(&self) -> &[u64] {
        &self.bottom_degrees
    }

    pub fn top_degrees(&self) -> &[u64] {
        &self.top_degrees
    }

    pub fn degrees(&self, side: Side) -> &[u64] {
        match side {
            Side::Bottom => &self.bottom_degrees,
            Side::Top => &self.top_degrees,
        }
    }

    /// Neighbours of a node on `side`, as `(other-side id, multiplicity)`.
    pub fn neighbors(&self, side: Side, node: usize) -> &[(usize, u64)] {
        match side {
            Side::Bottom => &self.bottom_adj[node],
            Side::Top => &self.top_adj[node],
        }
    }

    /// Number of distinct (bottom, top) pairs with positive multiplicity.
    pub fn edge_count(&self) -> usize {
        self.bottom_adj.iter().map(Vec::len).sum()
    }

    pub fn weight(&self, bottom: usize, top: usize) -> u64 {
        let row = &self.bottom_adj[bottom];
        row.binary_search_by_key(&top, |&(j, _)| j).map_or(0, |k| row[k].1)
    }

    /// All edges as `(bottom, top, multiplicity)`, ordered by bottom then top.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.bottom_adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&(j, w)| (i, j, w)))
    }

    /// The same graph with the roles of the two sides exchanged.
    pub fn transposed(&self) -> BipartiteGraph {
        BipartiteGraph {
            bottom_adj: self.top_adj.clone(),
            top_adj: self.bottom_adj.clone(),
            bottom_degrees: self.top_degrees.clone(),
            top_degrees: self.bottom_degrees.clone(),
            total: self.total,
        }
    }
}

/// Bipartite degrees carried along with a projection. Projected modularity
/// uses them as its null-model weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sidecar {
    pub side: Side,
    pub degrees: Vec<u64>,
    pub total: u64,
}

/// Weighted undirected graph stored as a symmetric adjacency matrix, self
/// loops on the diagonal. `k_i` is the row sum and `2E` the sum of all
/// entries, so a self loop of weight `w` adds `w` (not `2w`) to both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedGraph {
    adj: Rows,
    strengths: Vec<u64>,
    two_e: u64,
    sidecar: Option<Sidecar>,
}

impl ProjectedGraph {
    fn from_rows(adj: Rows, sidecar: Option<Sidecar>) -> Self {
        let strengths: Vec<u64> = adj.iter().map(|r| r.iter().map(|&(_, w)| w).sum()).collect();
        let two_e = strengths.iter().sum();
        ProjectedGraph {
            adj,
            strengths,
            two_e,
            sidecar,
        }
    }

    /// Builds a plain weighted graph from undirected edges `(i, j, w)`.
    /// An off-diagonal edge sets both `A_ij` and `A_ji`; `(i, i, w)` adds
    /// `w` to `A_ii`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut triples = Vec::new();
        for (i, j, w) in edges {
            for id in [i, j] {
                if id >= n {
                    return Err(Error::NodeOutOfRange {
                        side: "node",
                        id,
                        size: n,
                    });
                }
            }
            triples.push((i, j, w));
            if i != j {
                triples.push((j, i, w));
            }
        }
        Ok(Self::from_rows(rows_from_triples(n, triples), None))
    }

    /// Attaches bipartite degrees, enabling projected modularity.
    pub fn with_sidecar(mut self, sidecar: Sidecar) -> Result<Self> {
        if sidecar.degrees.len() != self.node_count() {
            return Err(Error::PartitionSize {
                expected: self.node_count(),
                got: sidecar.degrees.len(),
            });
        }
        self.sidecar = Some(sidecar);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// `Σ_ij A_ij`.
    pub fn two_e(&self) -> u64 {
        self.two_e
    }

    /// Row sum `k_i`, diagonal included.
    pub fn strength(&self, node: usize) -> u64 {
        self.strengths[node]
    }

    pub fn strengths(&self) -> &[u64] {
        &self.strengths
    }

    pub fn neighbors(&self, node: usize) -> &[(usize, u64)] {
        &self.adj[node]
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        let row = &self.adj[i];
        row.binary_search_by_key(&j, |&(k, _)| k).map_or(0, |k| row[k].1)
    }

    pub fn self_loop(&self, node: usize) -> u64 {
        self.weight(node, node)
    }

    pub fn sidecar(&self) -> Option<&Sidecar> {
        self.sidecar.as_ref()
    }

    /// Upper-triangle entries `(i, j, A_ij)` with `i <= j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&&(j, _)| j >= i).map(move |&(j, w)| (i, j, w)))
    }

    /// Number of stored matrix entries, both triangles and the diagonal.
    pub fn stored_entries(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

/// Whether a projection keeps `A_ii`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelfLoops {
    #[default]
    Keep,
    /// Zero the diagonal. `2E` then counts ordered pairs of distinct nodes
    /// only, and aggregation no longer commutes with projection.
    Drop,
}

/// Weighted one-mode projection onto `side`: `A_ij = Σ_m B_im B_jm` over the
/// nodes of the other side, diagonal included.
pub fn project(g: &BipartiteGraph, side: Side) -> ProjectedGraph {
    project_with(g, side, SelfLoops::Keep)
}

/// [`project`] with a choice about the diagonal. The sidecar degrees are the
/// same either way.
pub fn project_with(g: &BipartiteGraph, side: Side, loops: SelfLoops) -> ProjectedGraph {
    let n = g.node_count(side);
    let mut acc = SparseAccumulator::new(n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        for &(m, b_im) in g.neighbors(side, i) {
            for &(j, b_jm) in g.neighbors(side.other(), m) {
                if j != i || loops == SelfLoops::Keep {
                    acc.add(j, b_im * b_jm);
                }
            }
        }
        rows.push(acc.drain_sorted());
    }
    let sidecar = Sidecar {
        side,
        degrees: g.degrees(side).to_vec(),
        total: g.total_weight(),
    };
    ProjectedGraph::from_rows(rows, Some(sidecar))
}

/// Result of collapsing a bipartite graph by a joint partition.
///
/// Each community holding bottom nodes becomes one new bottom node, each
/// community holding top nodes one new top node. New ids follow ascending
/// community label on each side; `bottom_labels[k]` is the community label of
/// new bottom node `k`.
#[derive(Debug, Clone)]
pub struct AggregatedBipartite {
    pub graph: BipartiteGraph,
    pub bottom_labels: Vec<usize>,
    pub top_labels: Vec<usize>,
    /// For every original bottom node, the new bottom node it was folded into.
    pub bottom_map: Vec<usize>,
    pub top_map: Vec<usize>,
}

impl AggregatedBipartite {
    /// The partition on the collapsed graph that mirrors the input partition:
    /// both halves of a mixed community share its label.
    pub fn induced_partition(&self) -> BipartitePartition {
        BipartitePartition::from_labels(self.bottom_labels.clone(), self.top_labels.clone())
    }
}

fn side_map(labels: &[usize], count: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut slot = vec![usize::MAX; count];
    for &c in labels {
        if c >= count {
            return Err(Error::LabelOutOfRange { label: c, count });
        }
        slot[c] = 0;
    }
    let mut present = Vec::new();
    for (c, s) in slot.iter_mut().enumerate() {
        if *s == 0 {
            *s = present.len();
            present.push(c);
        }
    }
    Ok((labels.iter().map(|&c| slot[c]).collect(), present))
}

/// Induced bipartite graph `B'_cm = Σ_{i∈c} B_im`, applied to both sides.
/// Total weight is preserved. With the top side left as singletons this is
/// exactly the bottom-only collapse whose projection equals the collapsed
/// projection.
pub fn aggregate_bipartite(g: &BipartiteGraph, p: &BipartitePartition) -> Result<AggregatedBipartite> {
    p.check_len(g.n_bottom(), g.n_top())?;
    let count = p.community_count();
    let (bottom_map, bottom_labels) = side_map(p.bottom(), count)?;
    let (top_map, top_labels) = side_map(p.top(), count)?;
    let graph = BipartiteGraph::from_edges(
        bottom_labels.len(),
        top_labels.len(),
        g.edges().map(|(i, j, w)| (bottom_map[i], top_map[j], w)),
    )?;
    Ok(AggregatedBipartite {
        graph,
        bottom_labels,
        top_labels,
        bottom_map,
        top_map,
    })
}

/// Induced graph `A'_cd = Σ_{i∈c, j∈d} A_ij`, one node per community label.
/// The bipartite sidecar is summed per community.
pub fn aggregate_projected(g: &ProjectedGraph, p: &Partition) -> Result<ProjectedGraph> {
    p.check_len(g.node_count())?;
    let k = p.community_count();
    if let Some(&bad) = p.labels().iter().find(|&&c| c >= k) {
        return Err(Error::LabelOutOfRange { label: bad, count: k });
    }
    let members = p.communities();
    let mut acc = SparseAccumulator::new(k);
    let mut rows = Vec::with_capacity(k);
    for nodes in &members {
        for &i in nodes {
            for &(j, w) in g.neighbors(i) {
                acc.add(p.label(j), w);
            }
        }
        rows.push(acc.drain_sorted());
    }
    let sidecar = g.sidecar().map(|s| {
        let mut degrees = vec![0; k];
        for (i, &q) in s.degrees.iter().enumerate() {
            degrees[p.label(i)] += q;
        }
        Sidecar {
            side: s.side,
            degrees,
            total: s.total,
        }
    });
    Ok(ProjectedGraph::from_rows(rows, sidecar))
}
