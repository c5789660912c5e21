//! Standard, Barber and projected modularity, plus [`CommunityState`]: the
//! incremental bookkeeping that gives all three objectives one move/gain
//! interface for the Louvain engine.
//!
//! Every objective has the shape
//!
//! ```text
//! Q = Σ_c  in_c / W  −  λ K · null_c
//! ```
//!
//! where `in_c` is the adjacency weight inside `c`. For standard modularity
//! `W = 2E`, `K = 1/(2E)²` and `null_c = (Σ_c k_i)²`; for projected
//! modularity `K = 1/F²` and `null_c = (Σ_c q_i)²`; for Barber modularity on a
//! bipartite graph `W = 2F`, `K = 1/F²` and `null_c = (Σ_c q_i)(Σ_c d_j)`.
//! Weight sums stay integers until the final division, so the all-in-one
//! partition scores exactly zero at `λ = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, ProjectedGraph};
use crate::partition::{BipartitePartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveKind {
    Standard,
    Barber,
    Projected,
}

impl ObjectiveKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectiveKind::Standard => "standard",
            ObjectiveKind::Barber => "barber",
            ObjectiveKind::Projected => "projected",
        }
    }
}

/// An objective together with its resolution parameter `λ > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Objective {
    pub kind: ObjectiveKind,
    pub resolution: f64,
}

impl Objective {
    pub fn new(kind: ObjectiveKind, resolution: f64) -> Result<Self> {
        if !(resolution.is_finite() && resolution > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "resolution must be positive, got {resolution}"
            )));
        }
        Ok(Objective { kind, resolution })
    }

    pub fn standard() -> Self {
        Objective {
            kind: ObjectiveKind::Standard,
            resolution: 1.0,
        }
    }

    pub fn barber() -> Self {
        Objective {
            kind: ObjectiveKind::Barber,
            resolution: 1.0,
        }
    }

    pub fn projected() -> Self {
        Objective {
            kind: ObjectiveKind::Projected,
            resolution: 1.0,
        }
    }

    pub fn with_kind(self, kind: ObjectiveKind) -> Self {
        Objective { kind, ..self }
    }

    /// Evaluates a one-mode objective (standard or projected).
    pub fn evaluate(&self, g: &ProjectedGraph, p: &Partition) -> Result<f64> {
        match self.kind {
            ObjectiveKind::Standard => modularity_standard(g, p, self.resolution),
            ObjectiveKind::Projected => modularity_projected(g, p, self.resolution),
            ObjectiveKind::Barber => Err(Error::ObjectiveMismatch("barber")),
        }
    }
}

impl Default for Objective {
    fn default() -> Self {
        Objective::projected()
    }
}

/// `(in_total * scale_in) − λ * null_total` over `denom`, with the two
/// integer totals converted to float only at the end.
fn finish(in_term: f64, null_term: f64, resolution: f64) -> f64 {
    if resolution == 1.0 {
        in_term - null_term
    } else {
        in_term - resolution * null_term
    }
}

fn per_community_sums(p: &Partition, g: &ProjectedGraph, weights: &[u64]) -> (u128, Vec<u64>) {
    let mut inside: u128 = 0;
    let mut tot = vec![0u64; p.community_count()];
    for (i, &weight) in weights.iter().enumerate().take(g.node_count()) {
        let ci = p.label(i);
        tot[ci] += weight;
        for &(j, w) in g.neighbors(i) {
            if p.label(j) == ci {
                inside += u128::from(w);
            }
        }
    }
    (inside, tot)
}

/// Newman modularity `(1/2E) Σ_ij (A_ij − λ k_i k_j / 2E) δ(c_i, c_j)`.
pub fn modularity_standard(g: &ProjectedGraph, p: &Partition, resolution: f64) -> Result<f64> {
    p.check_len(g.node_count())?;
    if g.two_e() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (inside, tot) = per_community_sums(p, g, g.strengths());
    let two_e = u128::from(g.two_e());
    let null: u128 = tot.iter().map(|&s| u128::from(s) * u128::from(s)).sum();
    let denom = (two_e * two_e) as f64;
    Ok(finish((inside * two_e) as f64 / denom, null as f64 / denom, resolution))
}

/// Projected modularity `Σ_ij (A_ij / 2E − λ q_i q_j / F²) δ(c_i, c_j)`, with
/// `q` and `F` taken from the bipartite graph the projection came from.
pub fn modularity_projected(g: &ProjectedGraph, p: &Partition, resolution: f64) -> Result<f64> {
    p.check_len(g.node_count())?;
    let sidecar = g.sidecar().ok_or(Error::MissingSidecar)?;
    if g.two_e() == 0 || sidecar.total == 0 {
        return Err(Error::EmptyGraph);
    }
    let (inside, tot) = per_community_sums(p, g, &sidecar.degrees);
    let f = u128::from(sidecar.total);
    let null: u128 = tot.iter().map(|&s| u128::from(s) * u128::from(s)).sum();
    Ok(finish(
        inside as f64 / g.two_e() as f64,
        null as f64 / (f * f) as f64,
        resolution,
    ))
}

/// Barber modularity `(1/F) Σ_ij (B_ij − λ q_i d_j / F) δ(c_i, c_j)` over
/// bottom × top pairs.
pub fn modularity_barber(g: &BipartiteGraph, p: &BipartitePartition, resolution: f64) -> Result<f64> {
    p.check_len(g.n_bottom(), g.n_top())?;
    if g.total_weight() == 0 {
        return Err(Error::EmptyGraph);
    }
    let k = p.community_count();
    let mut bottom_sum = vec![0u64; k];
    let mut top_sum = vec![0u64; k];
    for (i, &q) in g.bottom_degrees().iter().enumerate() {
        bottom_sum[p.bottom()[i]] += q;
    }
    for (j, &d) in g.top_degrees().iter().enumerate() {
        top_sum[p.top()[j]] += d;
    }
    let inside: u128 = g
        .edges()
        .filter(|&(i, j, _)| p.bottom()[i] == p.top()[j])
        .map(|(_, _, w)| u128::from(w))
        .sum();
    let null: u128 = bottom_sum
        .iter()
        .zip(&top_sum)
        .map(|(&a, &b)| u128::from(a) * u128::from(b))
        .sum();
    let f = u128::from(g.total_weight());
    let denom = (f * f) as f64;
    Ok(finish((inside * f) as f64 / denom, null as f64 / denom, resolution))
}

/// Null-model weight attached to each node.
#[derive(Debug, Clone)]
enum NullWeights {
    /// One weight per node; a community's null term is its squared sum.
    Single(Vec<u64>),
    /// Separate bottom and top weights; a community's null term is the
    /// product of its bottom and top sums.
    Split { bottom: Vec<u64>, top: Vec<u64> },
}

/// Mutable community assignment over a weighted graph with the running sums
/// needed to evaluate moves in O(degree).
///
/// A node moves by being detached into a fresh singleton community and then
/// inserted elsewhere; `gain_on_remove` and `gain_on_insert` report the exact
/// objective change of each half.
#[derive(Debug, Clone)]
pub struct CommunityState<'g> {
    graph: &'g ProjectedGraph,
    null: NullWeights,
    /// `1 / W`
    inv_w: f64,
    /// `λ K`
    null_scale: f64,
    labels: Vec<usize>,
    sizes: Vec<usize>,
    inside: Vec<u64>,
    sum_a: Vec<u64>,
    sum_b: Vec<u64>,
    free: Vec<usize>,
}

impl<'g> CommunityState<'g> {
    /// State for standard or projected modularity on a one-mode graph,
    /// starting from `initial` or from singletons.
    pub fn unipartite(graph: &'g ProjectedGraph, objective: Objective, initial: Option<&Partition>) -> Result<Self> {
        if graph.two_e() == 0 {
            return Err(Error::EmptyGraph);
        }
        let (null, k) = match objective.kind {
            ObjectiveKind::Standard => {
                let w = graph.two_e() as f64;
                (NullWeights::Single(graph.strengths().to_vec()), 1.0 / (w * w))
            }
            ObjectiveKind::Projected => {
                let s = graph.sidecar().ok_or(Error::MissingSidecar)?;
                if s.total == 0 {
                    return Err(Error::EmptyGraph);
                }
                let f = s.total as f64;
                (NullWeights::Single(s.degrees.clone()), 1.0 / (f * f))
            }
            ObjectiveKind::Barber => return Err(Error::ObjectiveMismatch("barber")),
        };
        let labels = match initial {
            Some(p) => {
                p.check_len(graph.node_count())?;
                p.labels().to_vec()
            }
            None => (0..graph.node_count()).collect(),
        };
        Ok(Self::build(graph, null, k * objective.resolution, labels))
    }

    /// State for Barber modularity. `joint` is the one-mode graph on
    /// `n_bottom + n_top` nodes whose edges are the bipartite edges (tops
    /// offset by `n_bottom`); `initial` assigns both sides.
    pub fn bipartite(
        joint: &'g ProjectedGraph,
        g: &BipartiteGraph,
        resolution: f64,
        initial: Option<&BipartitePartition>,
    ) -> Result<Self> {
        let (nb, nt) = (g.n_bottom(), g.n_top());
        if joint.node_count() != nb + nt {
            return Err(Error::PartitionSize {
                expected: nb + nt,
                got: joint.node_count(),
            });
        }
        if g.total_weight() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut bottom = g.bottom_degrees().to_vec();
        bottom.resize(nb + nt, 0);
        let mut top = vec![0; nb];
        top.extend_from_slice(g.top_degrees());
        let labels = match initial {
            Some(p) => {
                p.check_len(nb, nt)?;
                p.bottom().iter().chain(p.top()).copied().collect()
            }
            None => (0..nb + nt).collect(),
        };
        let f = g.total_weight() as f64;
        Ok(Self::build(
            joint,
            NullWeights::Split { bottom, top },
            resolution / (f * f),
            labels,
        ))
    }

    /// Barber state on a collapsed graph whose nodes carry both a bottom and
    /// a top degree sum, starting from singletons. `total` is `F` of the
    /// original bipartite graph.
    pub(crate) fn fused(
        graph: &'g ProjectedGraph,
        bottom: Vec<u64>,
        top: Vec<u64>,
        total: u64,
        resolution: f64,
    ) -> Result<Self> {
        let n = graph.node_count();
        if bottom.len() != n || top.len() != n {
            return Err(Error::PartitionSize {
                expected: n,
                got: bottom.len().min(top.len()),
            });
        }
        if total == 0 || graph.two_e() == 0 {
            return Err(Error::EmptyGraph);
        }
        let f = total as f64;
        Ok(Self::build(
            graph,
            NullWeights::Split { bottom, top },
            resolution / (f * f),
            (0..n).collect(),
        ))
    }

    fn build(graph: &'g ProjectedGraph, null: NullWeights, null_scale: f64, labels: Vec<usize>) -> Self {
        let n = graph.node_count();
        // One slot per node is always enough: a node leaving a community of
        // two or more leaves at most n - 1 communities occupied.
        let slots = n.max(labels.iter().map(|&c| c + 1).max().unwrap_or(0));
        let mut state = CommunityState {
            graph,
            null,
            inv_w: 1.0 / graph.two_e() as f64,
            null_scale,
            labels,
            sizes: vec![0; slots],
            inside: vec![0; slots],
            sum_a: vec![0; slots],
            sum_b: vec![0; slots],
            free: Vec::new(),
        };
        for i in 0..n {
            let c = state.labels[i];
            state.sizes[c] += 1;
            let (a, b) = state.node_null(i);
            state.sum_a[c] += a;
            state.sum_b[c] += b;
            for &(j, w) in graph.neighbors(i) {
                if state.labels[j] == c {
                    state.inside[c] += w;
                }
            }
        }
        state.free = (0..slots).rev().filter(|&c| state.sizes[c] == 0).collect();
        state
    }

    fn node_null(&self, n: usize) -> (u64, u64) {
        match &self.null {
            NullWeights::Single(w) => (w[n], 0),
            NullWeights::Split { bottom, top } => (bottom[n], top[n]),
        }
    }

    pub fn graph(&self) -> &'g ProjectedGraph {
        self.graph
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, n: usize) -> usize {
        self.labels[n]
    }

    pub fn community_size(&self, c: usize) -> usize {
        self.sizes.get(c).copied().unwrap_or(0)
    }

    pub fn community_count(&self) -> usize {
        self.sizes.iter().filter(|&&s| s > 0).count()
    }

    /// `k_n^c`: weight from `n` into community `c`, ignoring `n`'s self loop.
    pub fn link_weight(&self, n: usize, c: usize) -> u64 {
        self.graph
            .neighbors(n)
            .iter()
            .filter(|&&(j, _)| j != n && self.labels[j] == c)
            .map(|&(_, w)| w)
            .sum()
    }

    /// Gain of inserting the detached node `n` into `c`, given `c`'s sums
    /// without `n` and the link weight between them.
    fn insert_gain_with(&self, n: usize, link: u64, sum_a: u64, sum_b: u64) -> f64 {
        let (a, b) = self.node_null(n);
        let null = match self.null {
            NullWeights::Single(_) => 2.0 * a as f64 * sum_a as f64,
            NullWeights::Split { .. } => a as f64 * sum_b as f64 + b as f64 * sum_a as f64,
        };
        2.0 * link as f64 * self.inv_w - self.null_scale * null
    }

    /// Sums of `c` with `n` taken out if it is a member.
    fn sums_without(&self, n: usize, c: usize) -> (u64, u64) {
        let (mut a, mut b) = (
            self.sum_a.get(c).copied().unwrap_or(0),
            self.sum_b.get(c).copied().unwrap_or(0),
        );
        if self.labels[n] == c {
            let (na, nb) = self.node_null(n);
            a -= na;
            b -= nb;
        }
        (a, b)
    }

    /// Objective change from merging `n`, currently alone, into community `c`.
    pub fn gain_on_insert(&self, n: usize, c: usize) -> Result<f64> {
        if self.sizes[self.labels[n]] != 1 {
            return Err(Error::NotIsolated(n));
        }
        let (a, b) = self.sums_without(n, c);
        Ok(self.insert_gain_with(n, self.link_weight(n, c), a, b))
    }

    /// Objective change from moving `n` out of `c` into a fresh singleton.
    pub fn gain_on_remove(&self, n: usize, c: usize) -> Result<f64> {
        if self.labels[n] != c {
            return Err(Error::NotMember { node: n, community: c });
        }
        let (a, b) = self.sums_without(n, c);
        Ok(-self.insert_gain_with(n, self.link_weight(n, c), a, b))
    }

    /// Moves `n` out of its community into an empty one and returns the new
    /// label. A node that is already alone stays where it is.
    pub fn detach(&mut self, n: usize) -> usize {
        let old = self.labels[n];
        if self.sizes[old] == 1 {
            return old;
        }
        let link = self.link_weight(n, old);
        self.take(n, link);
        let fresh = loop {
            let c = self.free.pop().expect("a free community slot always exists");
            if self.sizes[c] == 0 {
                break c;
            }
        };
        self.put(n, fresh, 0);
        fresh
    }

    /// Inserts the detached node `n` into `c`.
    pub fn insert(&mut self, n: usize, c: usize) -> Result<()> {
        let own = self.labels[n];
        if self.sizes[own] != 1 {
            return Err(Error::NotIsolated(n));
        }
        if c == own {
            return Ok(());
        }
        let link = self.link_weight(n, c);
        self.take(n, 0);
        self.put(n, c, link);
        Ok(())
    }

    /// Removes `n` from its community, leaving it in limbo. `link` must be
    /// `k_n` into that community.
    pub(crate) fn take(&mut self, n: usize, link: u64) {
        let c = self.labels[n];
        let (a, b) = self.node_null(n);
        self.sizes[c] -= 1;
        self.sum_a[c] -= a;
        self.sum_b[c] -= b;
        self.inside[c] -= 2 * link + self.graph.self_loop(n);
        if self.sizes[c] == 0 {
            self.free.push(c);
        }
        self.labels[n] = usize::MAX;
    }

    /// Places the limbo node `n` into `c`; `link` is `k_n` into `c`.
    pub(crate) fn put(&mut self, n: usize, c: usize, link: u64) {
        let (a, b) = self.node_null(n);
        self.sizes[c] += 1;
        self.sum_a[c] += a;
        self.sum_b[c] += b;
        self.inside[c] += 2 * link + self.graph.self_loop(n);
        self.labels[n] = c;
    }

    /// Gain of placing the limbo node `n` into `c` with link weight `link`.
    pub(crate) fn limbo_gain(&self, n: usize, c: usize, link: u64) -> f64 {
        self.insert_gain_with(n, link, self.sum_a[c], self.sum_b[c])
    }

    /// Objective value of the current assignment, from the running sums.
    pub fn value(&self) -> f64 {
        let inside: u128 = self.inside.iter().map(|&x| u128::from(x)).sum();
        let null: u128 = match self.null {
            NullWeights::Single(_) => self.sum_a.iter().map(|&s| u128::from(s) * u128::from(s)).sum(),
            NullWeights::Split { .. } => self
                .sum_a
                .iter()
                .zip(&self.sum_b)
                .map(|(&a, &b)| u128::from(a) * u128::from(b))
                .sum(),
        };
        inside as f64 * self.inv_w - self.null_scale * null as f64
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_labels(self.labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{project, Side};
    use approx::assert_abs_diff_eq;

    fn two_disjoint_edges() -> BipartiteGraph {
        BipartiteGraph::from_edges(2, 2, [(0, 0, 1), (1, 1, 1)]).unwrap()
    }

    /// The one-mode graph of two disjoint unit edges `0-1`, `2-3`.
    fn two_components() -> ProjectedGraph {
        ProjectedGraph::from_edges(4, [(0, 1, 1), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn standard_examples() {
        let g = two_components();
        assert_eq!(modularity_standard(&g, &Partition::single(4), 1.0).unwrap(), 0.0);
        let p = Partition::from_labels(vec![0, 0, 1, 1]);
        assert_abs_diff_eq!(modularity_standard(&g, &p, 1.0).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(modularity_standard(&g, &p, 2.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn standard_resolution_two_on_disjoint_single_edges() {
        // Projection of two disjoint edges: two nodes with unit self loops.
        let g = project(&two_disjoint_edges(), Side::Bottom);
        let p = Partition::singletons(2);
        assert_abs_diff_eq!(modularity_standard(&g, &p, 1.0).unwrap(), 0.5, epsilon = 1e-15);
        // 2 * (1/2 - 2 * (1/2)^2)
        assert_abs_diff_eq!(modularity_standard(&g, &p, 2.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn barber_examples() {
        let g = two_disjoint_edges();
        assert_eq!(
            modularity_barber(&g, &BipartitePartition::single(2, 2), 1.0).unwrap(),
            0.0
        );
        let p = BipartitePartition::from_labels(vec![0, 1], vec![0, 1]);
        assert_abs_diff_eq!(modularity_barber(&g, &p, 1.0).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn barber_equal_blocks_approach_one_minus_inverse_count() {
        // C disjoint complete K_{2,2} blocks.
        for c in 1..6 {
            let edges = (0..c).flat_map(|b| {
                [
                    (2 * b, 2 * b, 1),
                    (2 * b, 2 * b + 1, 1),
                    (2 * b + 1, 2 * b, 1),
                    (2 * b + 1, 2 * b + 1, 1),
                ]
            });
            let g = BipartiteGraph::from_edges(2 * c, 2 * c, edges).unwrap();
            let labels: Vec<usize> = (0..2 * c).map(|i| i / 2).collect();
            let p = BipartitePartition::from_labels(labels.clone(), labels);
            let q = modularity_barber(&g, &p, 1.0).unwrap();
            assert_abs_diff_eq!(q, 1.0 - 1.0 / c as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn projected_examples() {
        let g = project(&two_disjoint_edges(), Side::Bottom);
        assert_eq!(modularity_projected(&g, &Partition::single(2), 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            modularity_projected(&g, &Partition::singletons(2), 1.0).unwrap(),
            0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn projected_needs_sidecar_and_weight() {
        let g = two_components();
        assert!(matches!(
            modularity_projected(&g, &Partition::single(4), 1.0),
            Err(Error::MissingSidecar)
        ));
        let empty = project(&BipartiteGraph::empty(2, 2), Side::Bottom);
        assert!(matches!(
            modularity_standard(&empty, &Partition::single(2), 1.0),
            Err(Error::EmptyGraph)
        ));
        assert!(matches!(
            modularity_barber(&BipartiteGraph::empty(1, 1), &BipartitePartition::single(1, 1), 1.0),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn projected_gain_on_triangle_is_zero() {
        // One top node of degree 3 projects to a triangle with self loops:
        // 2E = 9, q = (1, 1, 1), F = 3.
        let b = BipartiteGraph::from_edges(3, 1, [(0, 0, 1), (1, 0, 1), (2, 0, 1)]).unwrap();
        let g = project(&b, Side::Bottom);
        let state = CommunityState::unipartite(&g, Objective::projected(), None).unwrap();
        // 2 * 1/9 - 2 * 1 * 1/9
        assert_abs_diff_eq!(state.gain_on_insert(0, 1).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn insert_into_empty_community_is_zero() {
        let b = BipartiteGraph::from_edges(3, 2, [(0, 0, 1), (1, 0, 1), (2, 1, 1)]).unwrap();
        let g = project(&b, Side::Bottom);
        let mut state = CommunityState::unipartite(&g, Objective::projected(), None).unwrap();
        state.insert(1, 0).unwrap();
        // community 1 is empty now
        assert_eq!(state.community_size(1), 0);
        assert_eq!(state.gain_on_insert(2, 1).unwrap(), 0.0);
    }

    #[test]
    fn contract_errors() {
        let g = project(
            &BipartiteGraph::from_edges(3, 1, [(0, 0, 1), (1, 0, 1), (2, 0, 1)]).unwrap(),
            Side::Bottom,
        );
        let mut state = CommunityState::unipartite(&g, Objective::standard(), None).unwrap();
        state.insert(0, 1).unwrap();
        assert!(matches!(state.gain_on_insert(0, 2), Err(Error::NotIsolated(0))));
        assert!(matches!(state.gain_on_remove(2, 1), Err(Error::NotMember { .. })));
        assert_eq!(state.gain_on_remove(2, 2).unwrap(), 0.0);
        assert!(CommunityState::unipartite(&g, Objective::barber(), None).is_err());
    }

    #[test]
    fn remove_then_insert_round_trip() {
        let b = BipartiteGraph::from_edges(4, 2, [(0, 0, 1), (1, 0, 2), (2, 0, 1), (2, 1, 1), (3, 1, 3)]).unwrap();
        let g = project(&b, Side::Bottom);
        for objective in [Objective::standard(), Objective::projected()] {
            let p = Partition::from_labels(vec![0, 0, 0, 1]);
            let mut state = CommunityState::unipartite(&g, objective, Some(&p)).unwrap();
            let out = state.gain_on_remove(1, 0).unwrap();
            state.detach(1);
            let back = state.gain_on_insert(1, 0).unwrap();
            assert_abs_diff_eq!(out + back, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn objective_rejects_bad_resolution() {
        assert!(Objective::new(ObjectiveKind::Standard, 0.0).is_err());
        assert!(Objective::new(ObjectiveKind::Standard, f64::NAN).is_err());
        assert!(Objective::new(ObjectiveKind::Standard, 0.5).is_ok());
    }
}
