use crate::error::{Error, Result};
use crate::exec::{mix_seed, rng_from_seed};
use crate::graph::{aggregate_bipartite, aggregate_projected, project_with, BipartiteGraph, ProjectedGraph, Side};
use crate::modularity::{modularity_barber, CommunityState, ObjectiveKind};
use crate::partition::{BipartitePartition, Partition};

use super::{
    agglomerate_barber, best_of, local_moves, louvain, visit_order, Algorithm, Assignment, DetectionResult,
    LouvainConfig,
};

/// The one-mode graph on `n_bottom + n_top` nodes whose edges are exactly the
/// bipartite edges; top node `j` becomes node `n_bottom + j`.
pub fn joint_graph(g: &BipartiteGraph) -> ProjectedGraph {
    let nb = g.n_bottom();
    ProjectedGraph::from_edges(nb + g.n_top(), g.edges().map(|(i, j, w)| (i, nb + j, w)))
        .expect("ids are in range by construction")
}

fn split_labels(labels: &[usize], n_bottom: usize) -> BipartitePartition {
    BipartitePartition::from_labels(labels[..n_bottom].to_vec(), labels[n_bottom..].to_vec())
}

/// Standard-modularity Louvain on the joint graph, ignoring bipartiteness.
pub fn detect_naive(g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    let joint = joint_graph(g);
    let cfg = cfg.with_kind(ObjectiveKind::Standard);
    let r = louvain(&joint, &cfg)?;
    let Assignment::Unipartite(p) = &r.assignment else {
        unreachable!("louvain returns one-mode partitions")
    };
    Ok(DetectionResult {
        algorithm: Algorithm::Naive,
        assignment: Assignment::Bipartite(split_labels(p.labels(), g.n_bottom())),
        ..r
    })
}

fn bilouvain_once(g: &BipartiteGraph, cfg: &LouvainConfig, seed: u64) -> Result<(BipartitePartition, usize)> {
    let mut rng = rng_from_seed(seed);
    let resolution = cfg.objective.resolution;
    let nb = g.n_bottom();
    let joint = joint_graph(g);
    let found = {
        let mut state = CommunityState::bipartite(&joint, g, resolution, None)?;
        let bottoms = visit_order(nb, cfg.node_order, &mut rng);
        let tops: Vec<usize> = visit_order(g.n_top(), cfg.node_order, &mut rng)
            .into_iter()
            .map(|j| nb + j)
            .collect();
        if local_moves(&mut state, &[bottoms, tops], cfg.min_gain) == 0 {
            return Ok((BipartitePartition::singletons(nb, g.n_top()), 0));
        }
        split_labels(state.labels(), nb)
    };
    let mut levels = 1;

    // Collapse each community to a bottom and a top node, then fuse the two
    // halves so later levels move whole communities.
    let agg = aggregate_bipartite(g, &found)?;
    let agg_nb = agg.graph.n_bottom();
    let induced = agg.induced_partition();
    let fuse = Partition::from_labels(induced.bottom().iter().chain(induced.top()).copied().collect());
    let mut current = aggregate_projected(&joint_graph(&agg.graph), &fuse)?;
    let mut q = vec![0; fuse.community_count()];
    let mut d = vec![0; fuse.community_count()];
    for (k, &w) in agg.graph.bottom_degrees().iter().enumerate() {
        q[fuse.label(k)] += w;
    }
    for (k, &w) in agg.graph.top_degrees().iter().enumerate() {
        d[fuse.label(agg_nb + k)] += w;
    }
    let mut membership: Vec<usize> = agg
        .bottom_map
        .iter()
        .map(|&k| fuse.label(k))
        .chain(agg.top_map.iter().map(|&k| fuse.label(agg_nb + k)))
        .collect();

    while cfg.max_levels.is_none_or(|m| levels < m) {
        let p = {
            let mut state = CommunityState::fused(&current, q.clone(), d.clone(), g.total_weight(), resolution)?;
            let order = visit_order(current.node_count(), cfg.node_order, &mut rng);
            if local_moves(&mut state, std::slice::from_ref(&order), cfg.min_gain) == 0 {
                break;
            }
            state.to_partition()
        };
        levels += 1;
        let (mut q2, mut d2) = (vec![0; p.community_count()], vec![0; p.community_count()]);
        for (k, &c) in p.labels().iter().enumerate() {
            q2[c] += q[k];
            d2[c] += d[k];
        }
        (q, d) = (q2, d2);
        for m in membership.iter_mut() {
            *m = p.label(*m);
        }
        current = aggregate_projected(&current, &p)?;
    }
    Ok((split_labels(&membership, nb), levels))
}

/// Louvain-style optimisation of Barber modularity directly on the bipartite
/// graph. The first level sweeps all bottom nodes, then all top nodes, until
/// nothing moves; communities may mix both kinds. The result is collapsed
/// with [`aggregate_bipartite`] and each community's two halves are fused
/// into one node carrying both degree sums, so that later levels move whole
/// communities.
pub fn detect_bilouvain(g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    let cfg = cfg.with_kind(ObjectiveKind::Barber);
    cfg.validate()?;
    if g.total_weight() == 0 {
        return Err(Error::EmptyGraph);
    }
    let runs = cfg.execution.map(cfg.restarts, |r| -> Result<DetectionResult> {
        let (partition, levels) = bilouvain_once(g, &cfg, cfg.restart_seed(r))?;
        Ok(DetectionResult {
            algorithm: Algorithm::BiLouvain,
            objective: cfg.objective,
            objective_value: modularity_barber(g, &partition, cfg.objective.resolution)?,
            assignment: Assignment::Bipartite(partition),
            levels,
            restart: r,
        })
    });
    best_of(runs.into_iter().collect::<Result<Vec<_>>>()?)
}

/// Projected-modularity Louvain on each one-mode projection, then greedy
/// Barber-modularity agglomeration of the bottom and top communities.
pub fn detect_dual_projection(g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    let cfg = cfg.with_kind(ObjectiveKind::Projected);
    let bottom = louvain(&project_with(g, Side::Bottom, cfg.self_loops), &cfg)?;
    let top_cfg = LouvainConfig {
        seed: mix_seed(cfg.seed, u64::MAX),
        ..cfg
    };
    let top = louvain(&project_with(g, Side::Top, cfg.self_loops), &top_cfg)?;
    let bottom_p = bottom.assignment.bottom();
    let offset = bottom_p.community_count();
    let initial = BipartitePartition::from_labels(
        bottom_p.labels().to_vec(),
        top.assignment.bottom().labels().iter().map(|&c| c + offset).collect(),
    );
    let merged = agglomerate_barber(g, &initial, cfg.objective.resolution)?;
    let barber = cfg.objective.with_kind(ObjectiveKind::Barber);
    Ok(DetectionResult {
        algorithm: Algorithm::DualProjection,
        objective: barber,
        objective_value: modularity_barber(g, &merged, barber.resolution)?,
        assignment: Assignment::Bipartite(merged),
        levels: bottom.levels.max(top.levels),
        restart: bottom.restart,
    })
}

/// Standard-modularity Louvain on the bottom projection.
pub fn detect_standard(g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    let r = louvain(
        &project_with(g, Side::Bottom, cfg.self_loops),
        &cfg.with_kind(ObjectiveKind::Standard),
    )?;
    Ok(DetectionResult {
        algorithm: Algorithm::Standard,
        ..r
    })
}

/// Projected-modularity Louvain on the bottom projection.
pub fn detect_projected(g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    let r = louvain(
        &project_with(g, Side::Bottom, cfg.self_loops),
        &cfg.with_kind(ObjectiveKind::Projected),
    )?;
    Ok(DetectionResult {
        algorithm: Algorithm::Projected,
        ..r
    })
}

pub fn detect(algorithm: Algorithm, g: &BipartiteGraph, cfg: &LouvainConfig) -> Result<DetectionResult> {
    match algorithm {
        Algorithm::Naive => detect_naive(g, cfg),
        Algorithm::BiLouvain => detect_bilouvain(g, cfg),
        Algorithm::DualProjection => detect_dual_projection(g, cfg),
        Algorithm::Standard => detect_standard(g, cfg),
        Algorithm::Projected => detect_projected(g, cfg),
        Algorithm::Louvain => Err(Error::InvalidParameter(
            "plain louvain runs on a one-mode graph; pick a bipartite pipeline".into(),
        )),
    }
}
