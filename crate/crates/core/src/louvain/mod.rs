//! Multi-level Louvain optimisation and the five bipartite detection
//! pipelines built on it.

mod agglomerate;
mod detect;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{mix_seed, rng_from_seed, Execution};
use crate::graph::{aggregate_projected, ProjectedGraph, SelfLoops};
use crate::modularity::{CommunityState, Objective, ObjectiveKind};
use crate::partition::{BipartitePartition, Partition};

pub use agglomerate::agglomerate_barber;
pub use detect::{
    detect, detect_bilouvain, detect_dual_projection, detect_naive, detect_projected, detect_standard, joint_graph,
};

/// Order in which phase-one sweeps visit nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeOrder {
    /// Fresh random permutation per level, drawn from the restart's stream.
    #[default]
    Shuffled,
    /// Ascending node id.
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LouvainConfig {
    pub objective: Objective,
    pub seed: u64,
    pub restarts: usize,
    /// A move must improve the objective by more than this.
    pub min_gain: f64,
    pub max_levels: Option<usize>,
    pub node_order: NodeOrder,
    pub execution: Execution,
    /// Diagonal handling for the pipelines that project first.
    pub self_loops: SelfLoops,
}

impl Default for LouvainConfig {
    fn default() -> Self {
        LouvainConfig {
            objective: Objective::default(),
            seed: 0,
            restarts: 10,
            min_gain: 1e-9,
            max_levels: None,
            node_order: NodeOrder::Shuffled,
            execution: Execution::default(),
            self_loops: SelfLoops::Keep,
        }
    }
}

impl LouvainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidParameter("restarts must be at least 1".into()));
        }
        if self.min_gain.is_nan() || self.min_gain < 0.0 {
            return Err(Error::InvalidParameter("min_gain must be non-negative".into()));
        }
        Objective::new(self.objective.kind, self.objective.resolution)?;
        Ok(())
    }

    pub fn with_kind(self, kind: ObjectiveKind) -> Self {
        LouvainConfig {
            objective: self.objective.with_kind(kind),
            ..self
        }
    }

    /// Seed of restart `index`.
    pub fn restart_seed(&self, index: usize) -> u64 {
        mix_seed(self.seed, index as u64)
    }
}

/// Which detection pipeline produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Plain Louvain on a one-mode graph.
    Louvain,
    Naive,
    #[serde(rename = "bilouvain")]
    BiLouvain,
    #[serde(rename = "dual")]
    DualProjection,
    Standard,
    Projected,
}

impl Algorithm {
    /// The five bipartite pipelines, in the order they are reported.
    pub const BIPARTITE: [Algorithm; 5] = [
        Algorithm::Naive,
        Algorithm::BiLouvain,
        Algorithm::DualProjection,
        Algorithm::Standard,
        Algorithm::Projected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Louvain => "louvain",
            Algorithm::Naive => "naive",
            Algorithm::BiLouvain => "bilouvain",
            Algorithm::DualProjection => "dual",
            Algorithm::Standard => "standard",
            Algorithm::Projected => "projected",
        }
    }

    /// True for pipelines whose result covers both node sets.
    pub fn is_bipartite(self) -> bool {
        matches!(
            self,
            Algorithm::Naive | Algorithm::BiLouvain | Algorithm::DualProjection
        )
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "louvain" => Algorithm::Louvain,
            "naive" => Algorithm::Naive,
            "bilouvain" => Algorithm::BiLouvain,
            "dual" | "dual-projection" | "dual_projection" => Algorithm::DualProjection,
            "standard" => Algorithm::Standard,
            "projected" => Algorithm::Projected,
            other => return Err(Error::InvalidParameter(format!("unknown algorithm {other:?}"))),
        })
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assignment {
    Unipartite(Partition),
    Bipartite(BipartitePartition),
}

impl Assignment {
    pub fn community_count(&self) -> usize {
        match self {
            Assignment::Unipartite(p) => p.community_count(),
            Assignment::Bipartite(p) => p.community_count(),
        }
    }

    /// Assignment of the bottom (or only) node set.
    pub fn bottom(&self) -> Partition {
        match self {
            Assignment::Unipartite(p) => p.clone(),
            Assignment::Bipartite(p) => p.bottom_restriction(),
        }
    }

    pub fn as_bipartite(&self) -> Option<&BipartitePartition> {
        match self {
            Assignment::Bipartite(p) => Some(p),
            Assignment::Unipartite(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DetectionResult {
    pub algorithm: Algorithm,
    pub objective: Objective,
    pub assignment: Assignment,
    /// The objective recomputed from scratch on `assignment`.
    pub objective_value: f64,
    pub levels: usize,
    /// Index of the restart that produced this result.
    pub restart: usize,
}

impl DetectionResult {
    pub fn community_count(&self) -> usize {
        self.assignment.community_count()
    }
}

/// Values closer than this are treated as ties by [`best_of`].
const TIE_TOLERANCE: f64 = 1e-12;

/// Rounding slack for zero-gain merges (see [`local_moves`]).
pub(crate) const ZERO_GAIN_SLACK: f64 = 1e-14;

/// Highest objective value wins; ties go to fewer communities, then to the
/// earlier entry.
pub fn best_of(results: Vec<DetectionResult>) -> Result<DetectionResult> {
    let mut iter = results.into_iter();
    let mut best = iter.next().ok_or(Error::NoResults)?;
    for r in iter {
        let better = if (r.objective_value - best.objective_value).abs() <= TIE_TOLERANCE {
            r.community_count() < best.community_count()
        } else {
            r.objective_value > best.objective_value
        };
        if better {
            best = r;
        }
    }
    Ok(best)
}

/// Phase one: sweep nodes in `order`, moving each to the neighbouring
/// community with the largest gain, until a sweep makes no move. Returns the
/// number of moves made.
///
/// A move must beat staying put by more than `min_gain`, except that a node
/// alone in its community also joins a neighbour when that costs nothing.
/// Such moves lower the community count, which never rises, so the sweep
/// still terminates.
pub(crate) fn local_moves(state: &mut CommunityState<'_>, orders: &[Vec<usize>], min_gain: f64) -> usize {
    let graph = state.graph();
    let mut weights = vec![0u64; state.node_count()];
    let mut touched: Vec<usize> = Vec::new();
    let mut total = 0;
    loop {
        let mut moves = 0;
        for order in orders {
            for &n in order {
                for &(j, w) in graph.neighbors(n) {
                    if j == n {
                        continue;
                    }
                    let c = state.label(j);
                    if weights[c] == 0 {
                        touched.push(c);
                    }
                    weights[c] += w;
                }
                let old = state.label(n);
                let old_link = weights[old];
                state.take(n, old_link);
                let stay = state.limbo_gain(n, old, old_link);
                let (mut best, mut best_gain) = (old, stay);
                touched.sort_unstable();
                for &c in &touched {
                    let gain = state.limbo_gain(n, c, weights[c]);
                    if gain > best_gain || (gain == best_gain && c < best) {
                        best = c;
                        best_gain = gain;
                    }
                }
                let alone = state.community_size(old) == 0;
                let improves = best_gain - stay > min_gain || (alone && best_gain - stay >= -ZERO_GAIN_SLACK);
                if best != old && improves {
                    state.put(n, best, weights[best]);
                    moves += 1;
                } else {
                    state.put(n, old, old_link);
                }
                for &c in &touched {
                    weights[c] = 0;
                }
                touched.clear();
            }
        }
        total += moves;
        if moves == 0 {
            return total;
        }
    }
}

fn visit_order(n: usize, order: NodeOrder, rng: &mut impl rand::Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    if order == NodeOrder::Shuffled {
        v.shuffle(rng);
    }
    v
}

/// One full multi-level Louvain run. Returns the flattened partition and the
/// number of levels that moved at least one node.
pub(crate) fn louvain_once(g: &ProjectedGraph, cfg: &LouvainConfig, seed: u64) -> Result<(Partition, usize)> {
    let mut rng = rng_from_seed(seed);
    let mut membership: Vec<usize> = (0..g.node_count()).collect();
    let mut current = g.clone();
    let mut levels = 0;
    while cfg.max_levels.is_none_or(|m| levels < m) {
        let mut state = CommunityState::unipartite(&current, cfg.objective, None)?;
        #[cfg(debug_assertions)]
        let before = state.value();
        let order = visit_order(current.node_count(), cfg.node_order, &mut rng);
        let moves = local_moves(&mut state, std::slice::from_ref(&order), cfg.min_gain);
        #[cfg(debug_assertions)]
        debug_assert!(state.value() >= before - 1e-10, "local moves decreased the objective");
        if moves == 0 {
            break;
        }
        levels += 1;
        let coarse = state.to_partition();
        for m in membership.iter_mut() {
            *m = coarse.label(*m);
        }
        current = aggregate_projected(&current, &coarse)?;
    }
    Ok((Partition::from_labels(membership), levels))
}

/// Best-of-restarts Louvain on a one-mode graph under a standard or
/// projected objective.
pub fn louvain(g: &ProjectedGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    cfg.validate()?;
    if g.two_e() == 0 {
        return Err(Error::EmptyGraph);
    }
    match cfg.objective.kind {
        ObjectiveKind::Barber => return Err(Error::ObjectiveMismatch("barber")),
        ObjectiveKind::Projected if g.sidecar().is_none() => return Err(Error::MissingSidecar),
        _ => {}
    }
    let runs = cfg.execution.map(cfg.restarts, |r| -> Result<DetectionResult> {
        let (partition, levels) = louvain_once(g, cfg, cfg.restart_seed(r))?;
        let objective_value = cfg.objective.evaluate(g, &partition)?;
        Ok(DetectionResult {
            algorithm: Algorithm::Louvain,
            objective: cfg.objective,
            assignment: Assignment::Unipartite(partition),
            objective_value,
            levels,
            restart: r,
        })
    });
    best_of(runs.into_iter().collect::<Result<Vec<_>>>()?)
}
