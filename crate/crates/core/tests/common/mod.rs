#![allow(dead_code)]

use bimod::exec::rng_from_seed;
use bimod::{BipartiteGraph, BipartitePartition, Partition};
use rand::Rng;

/// Random bipartite multigraph with up to `max_side` nodes per side and
/// integer weights in `1..=max_weight`.
pub fn random_graph(seed: u64, max_side: usize, max_weight: u64) -> BipartiteGraph {
    let mut rng = rng_from_seed(seed);
    let nb = rng.random_range(1..=max_side);
    let nt = rng.random_range(1..=max_side);
    let density = rng.random_range(0.05..0.6);
    let mut edges = Vec::new();
    for i in 0..nb {
        for j in 0..nt {
            if rng.random_bool(density) {
                edges.push((i, j, rng.random_range(1..=max_weight)));
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, 0, 1));
    }
    BipartiteGraph::from_edges(nb, nt, edges).unwrap()
}

/// Random sparse graph with a fixed number of unit edges, for larger sizes.
pub fn random_sparse_graph(seed: u64, nb: usize, nt: usize, edges: usize) -> BipartiteGraph {
    let mut rng = rng_from_seed(seed);
    let list: Vec<_> = (0..edges)
        .map(|_| (rng.random_range(0..nb), rng.random_range(0..nt), 1))
        .collect();
    BipartiteGraph::from_edges(nb, nt, list).unwrap()
}

pub fn random_labels(seed: u64, n: usize, k: usize) -> Vec<usize> {
    let mut rng = rng_from_seed(seed);
    (0..n).map(|_| rng.random_range(0..k.max(1))).collect()
}

pub fn random_partition(seed: u64, n: usize) -> Partition {
    let k = 1 + (seed as usize % n.max(1));
    Partition::from_labels(random_labels(seed, n, k))
}

pub fn random_bipartite_partition(seed: u64, g: &BipartiteGraph) -> BipartitePartition {
    let n = g.n_bottom() + g.n_top();
    let k = 1 + (seed as usize % n);
    let labels = random_labels(seed, n, k);
    BipartitePartition::from_labels(labels[..g.n_bottom()].to_vec(), labels[g.n_bottom()..].to_vec())
}

/// Dense incidence matrix.
pub fn dense(g: &BipartiteGraph) -> Vec<Vec<u64>> {
    let mut b = vec![vec![0; g.n_top()]; g.n_bottom()];
    for (i, j, w) in g.edges() {
        b[i][j] = w;
    }
    b
}

/// `Q_P` straight from the incidence matrix: project densely, sum the
/// within-community entries, subtract the squared bottom-degree shares.
pub fn projected_oracle(g: &BipartiteGraph, labels: &[usize], resolution: f64) -> f64 {
    let b = dense(g);
    let n = g.n_bottom();
    let f: u64 = b.iter().flatten().sum();
    let mut two_e = 0u64;
    let mut inside = 0u64;
    for i in 0..n {
        for j in 0..n {
            let a: u64 = (0..g.n_top()).map(|m| b[i][m] * b[j][m]).sum();
            two_e += a;
            if labels[i] == labels[j] {
                inside += a;
            }
        }
    }
    let k = labels.iter().max().map_or(0, |&m| m + 1);
    let mut q = vec![0u64; k];
    for i in 0..n {
        q[labels[i]] += b[i].iter().sum::<u64>();
    }
    let null: f64 = q.iter().map(|&x| (x as f64 / f as f64).powi(2)).sum();
    inside as f64 / two_e as f64 - resolution * null
}

/// `Q_B` straight from the incidence matrix, pair by pair.
pub fn barber_oracle(g: &BipartiteGraph, p: &BipartitePartition, resolution: f64) -> f64 {
    let b = dense(g);
    let f: u64 = b.iter().flatten().sum();
    let f = f as f64;
    let mut total = 0.0;
    for (i, row) in b.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            if p.bottom()[i] == p.top()[j] {
                let (qi, dj) = (g.bottom_degrees()[i] as f64, g.top_degrees()[j] as f64);
                total += w as f64 - resolution * qi * dj / f;
            }
        }
    }
    total / f
}

/// Shannon entropy in nats of a label sequence.
pub fn entropy(labels: &[usize]) -> f64 {
    let n = labels.len() as f64;
    let mut counts = std::collections::HashMap::new();
    for &l in labels {
        *counts.entry(l).or_insert(0usize) += 1;
    }
    counts.values().map(|&c| c as f64 / n).map(|p| -p * p.ln()).sum()
}

/// Homogeneity from entropies: `H(K|C) = H(K,C) − H(C)`.
pub fn homogeneity_oracle(classes: &[usize], clusters: &[usize]) -> f64 {
    let h_k = entropy(classes);
    if h_k == 0.0 {
        return 1.0;
    }
    let joint: Vec<usize> = classes.iter().zip(clusters).map(|(&a, &b)| a * 1_000_003 + b).collect();
    let conditional = entropy(&joint) - entropy(clusters);
    1.0 - conditional / h_k
}
