mod common;

use approx::assert_abs_diff_eq;
use bimod::louvain::{agglomerate_barber, detect, joint_graph};
use bimod::{
    modularity_barber, modularity_projected, modularity_standard, project, Algorithm, BipartiteGraph,
    BipartitePartition, Execution, LouvainConfig, Side,
};
use common::*;
use proptest::prelude::*;

fn cfg(seed: u64) -> LouvainConfig {
    LouvainConfig {
        seed,
        restarts: 3,
        ..LouvainConfig::default()
    }
}

/// `k` disjoint complete bipartite blocks of `a` bottoms and `b` tops.
fn blocks(k: usize, a: usize, b: usize) -> BipartiteGraph {
    let edges = (0..k).flat_map(|c| (0..a).flat_map(move |i| (0..b).map(move |j| (c * a + i, c * b + j, 1))));
    BipartiteGraph::from_edges(k * a, k * b, edges).unwrap()
}

/// Connected components of the bipartite graph, as joint labels.
fn components(g: &BipartiteGraph) -> Vec<usize> {
    let nb = g.n_bottom();
    let mut parent: Vec<usize> = (0..nb + g.n_top()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, j, _) in g.edges() {
        let (a, b) = (find(&mut parent, i), find(&mut parent, nb + j));
        parent[a] = b;
    }
    (0..parent.len()).map(|x| find(&mut parent, x)).collect()
}

#[test]
fn every_pipeline_finds_disjoint_blocks() {
    let g = blocks(3, 4, 3);
    for a in Algorithm::BIPARTITE {
        let r = detect(a, &g, &cfg(1)).unwrap();
        assert_eq!(r.community_count(), 3, "{a}");
        let bottom = r.assignment.bottom();
        for c in 0..3 {
            assert!((0..4).all(|i| bottom.label(c * 4 + i) == bottom.label(c * 4)), "{a}");
        }
    }
}

#[test]
fn disjoint_blocks_reach_block_sum() {
    // Each of C equal blocks contributes 1/C − 1/C².
    let g = blocks(4, 3, 3);
    let r = detect(Algorithm::BiLouvain, &g, &cfg(0)).unwrap();
    assert_abs_diff_eq!(r.objective_value, 0.75, epsilon = 1e-12);
    let r = detect(Algorithm::Projected, &g, &cfg(0)).unwrap();
    assert_abs_diff_eq!(r.objective_value, 0.75, epsilon = 1e-12);
}

#[test]
fn sequential_and_parallel_agree() {
    for seed in 0..10 {
        let g = random_graph(seed, 20, 2);
        for a in Algorithm::BIPARTITE {
            let par = detect(
                a,
                &g,
                &LouvainConfig {
                    execution: Execution::Parallel,
                    ..cfg(seed)
                },
            )
            .unwrap();
            let seq = detect(
                a,
                &g,
                &LouvainConfig {
                    execution: Execution::Sequential,
                    ..cfg(seed)
                },
            )
            .unwrap();
            assert_eq!(par.assignment, seq.assignment, "{a} seed {seed}");
            assert_eq!(par.objective_value, seq.objective_value);
        }
    }
}

#[test]
fn dual_merges_until_no_gain_remains() {
    for seed in 0..20 {
        let g = random_graph(seed, 15, 2);
        let r = detect(Algorithm::DualProjection, &g, &cfg(seed)).unwrap();
        let p = r.assignment.as_bipartite().unwrap().clone();
        let again = agglomerate_barber(&g, &p, 1.0).unwrap();
        assert_eq!(again.community_count(), p.community_count(), "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reported_values_match_recomputation(gs in any::<u64>(), seed in any::<u64>()) {
        let g = random_graph(gs, 15, 3);
        let projection = project(&g, Side::Bottom);
        for a in Algorithm::BIPARTITE {
            let r = detect(a, &g, &cfg(seed)).unwrap();
            let expected = match a {
                Algorithm::Standard => modularity_standard(&projection, &r.assignment.bottom(), 1.0).unwrap(),
                Algorithm::Projected => modularity_projected(&projection, &r.assignment.bottom(), 1.0).unwrap(),
                Algorithm::Naive => {
                    let p = r.assignment.as_bipartite().unwrap();
                    let joint: Vec<usize> = p.bottom().iter().chain(p.top()).copied().collect();
                    modularity_standard(&joint_graph(&g), &bimod::Partition::from_labels(joint), 1.0).unwrap()
                }
                _ => modularity_barber(&g, r.assignment.as_bipartite().unwrap(), 1.0).unwrap(),
            };
            assert_abs_diff_eq!(r.objective_value, expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn results_are_never_below_trivial_partitions(gs in any::<u64>(), seed in any::<u64>()) {
        let g = random_graph(gs, 15, 3);
        let r = detect(Algorithm::BiLouvain, &g, &cfg(seed)).unwrap();
        let singletons = modularity_barber(&g, &BipartitePartition::singletons(g.n_bottom(), g.n_top()), 1.0).unwrap();
        prop_assert!(r.objective_value >= singletons.max(0.0) - 1e-12);
        for a in [Algorithm::Standard, Algorithm::Projected] {
            prop_assert!(detect(a, &g, &cfg(seed)).unwrap().objective_value >= -1e-12);
        }
    }

    #[test]
    fn communities_never_span_components(gs in any::<u64>(), seed in any::<u64>()) {
        // Sparse graphs have several components.
        let g = random_sparse_graph(gs, 12, 12, 10);
        let comp = components(&g);
        let nb = g.n_bottom();
        for a in [Algorithm::Naive, Algorithm::BiLouvain] {
            let r = detect(a, &g, &cfg(seed)).unwrap();
            let p = r.assignment.as_bipartite().unwrap();
            let labels: Vec<usize> = p.bottom().iter().chain(p.top()).copied().collect();
            for x in 0..labels.len() {
                for y in 0..labels.len() {
                    let isolated = |n: usize| if n < nb { g.bottom_degrees()[n] == 0 } else { g.top_degrees()[n - nb] == 0 };
                    if labels[x] == labels[y] && !isolated(x) && !isolated(y) {
                        prop_assert_eq!(comp[x], comp[y], "{} joined components", a);
                    }
                }
            }
        }
    }

    #[test]
    fn same_seed_same_answer(gs in any::<u64>(), seed in any::<u64>()) {
        let g = random_graph(gs, 15, 2);
        for a in Algorithm::BIPARTITE {
            prop_assert_eq!(detect(a, &g, &cfg(seed)).unwrap().assignment, detect(a, &g, &cfg(seed)).unwrap().assignment);
        }
    }
}
