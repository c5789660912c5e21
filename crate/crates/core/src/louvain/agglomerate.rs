use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::Result;
use crate::graph::{aggregate_bipartite, BipartiteGraph};
use crate::partition::BipartitePartition;

#[derive(Debug, Clone, Copy)]
struct Candidate {
    gain: f64,
    a: usize,
    b: usize,
    version_a: u32,
    version_b: u32,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    // Max-heap on gain; among equal gains the lowest pair of labels first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .total_cmp(&other.gain)
            .then_with(|| (other.a, other.b).cmp(&(self.a, self.b)))
    }
}

/// Greedy agglomeration under Barber modularity.
///
/// Starting from `initial`, repeatedly merges the pair of communities whose
/// union raises `Q_B` the most, until every merge would lower it. Merging
/// `a` and `b` changes `Q_B` by
/// `(e_ab + e_ba) / F − λ (Q_a D_b + Q_b D_a) / F²`, where `e_ab` is the
/// weight from bottoms of `a` to tops of `b` and `Q`, `D` are the bottom and
/// top degree sums. Only pairs joined by at least one edge can gain, so the
/// candidate heap holds those pairs alone. Linked pairs whose merge is
/// neutral are merged too, favouring fewer communities on ties.
pub fn agglomerate_barber(
    g: &BipartiteGraph,
    initial: &BipartitePartition,
    resolution: f64,
) -> Result<BipartitePartition> {
    let agg = aggregate_bipartite(g, initial)?;
    let k = initial.community_count();
    let f = g.total_weight() as f64;
    let mut bottom_sum = vec![0u64; k];
    let mut top_sum = vec![0u64; k];
    for (node, &c) in agg.bottom_labels.iter().enumerate() {
        bottom_sum[c] += agg.graph.bottom_degrees()[node];
    }
    for (node, &c) in agg.top_labels.iter().enumerate() {
        top_sum[c] += agg.graph.top_degrees()[node];
    }
    let mut links: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); k];
    for (i, j, w) in agg.graph.edges() {
        let (a, b) = (agg.bottom_labels[i], agg.top_labels[j]);
        if a != b {
            *links[a].entry(b).or_default() += w;
            *links[b].entry(a).or_default() += w;
        }
    }

    let gain = |link: u64, bs: &[u64], ts: &[u64], a: usize, b: usize| -> f64 {
        let null = bs[a] as f64 * ts[b] as f64 + bs[b] as f64 * ts[a] as f64;
        link as f64 / f - resolution * null / (f * f)
    };

    let mut version = vec![0u32; k];
    let mut alive = vec![true; k];
    let mut parent: Vec<usize> = (0..k).collect();
    let mut heap = BinaryHeap::new();
    for (a, row) in links.iter().enumerate() {
        for (&b, &w) in row.range(a + 1..) {
            heap.push(Candidate {
                gain: gain(w, &bottom_sum, &top_sum, a, b),
                a,
                b,
                version_a: 0,
                version_b: 0,
            });
        }
    }

    while let Some(cand) = heap.pop() {
        let Candidate {
            gain: g_ab,
            a,
            b,
            version_a,
            version_b,
        } = cand;
        if !alive[a] || !alive[b] || version[a] != version_a || version[b] != version_b {
            continue;
        }
        if g_ab < -super::ZERO_GAIN_SLACK {
            break;
        }
        // fold b into a
        alive[b] = false;
        parent[b] = a;
        bottom_sum[a] += bottom_sum[b];
        top_sum[a] += top_sum[b];
        let moved = std::mem::take(&mut links[b]);
        links[a].remove(&b);
        for (x, w) in moved {
            if x == a {
                continue;
            }
            *links[a].entry(x).or_default() += w;
            let lx = &mut links[x];
            lx.remove(&b);
            *lx.entry(a).or_default() += w;
        }
        version[a] += 1;
        for (&x, &w) in &links[a] {
            let (lo, hi) = if a < x { (a, x) } else { (x, a) };
            heap.push(Candidate {
                gain: gain(w, &bottom_sum, &top_sum, lo, hi),
                a: lo,
                b: hi,
                version_a: version[lo],
                version_b: version[hi],
            });
        }
    }

    let root = |mut c: usize| {
        while parent[c] != c {
            c = parent[c];
        }
        c
    };
    Ok(BipartitePartition::from_labels(
        initial.bottom().iter().map(|&c| root(c)).collect(),
        initial.top().iter().map(|&c| root(c)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modularity::modularity_barber;

    #[test]
    fn pairs_blocks_with_their_counterparts() {
        // Two K_{2,2} blocks; start with sides separated.
        let edges = [
            (0, 0, 1),
            (0, 1, 1),
            (1, 0, 1),
            (1, 1, 1),
            (2, 2, 1),
            (2, 3, 1),
            (3, 2, 1),
            (3, 3, 1),
        ];
        let g = BipartiteGraph::from_edges(4, 4, edges).unwrap();
        let initial = BipartitePartition::from_labels(vec![0, 0, 1, 1], vec![2, 2, 3, 3]);
        let merged = agglomerate_barber(&g, &initial, 1.0).unwrap();
        assert_eq!(merged.community_count(), 2);
        assert_eq!(merged.bottom(), &[0, 0, 1, 1]);
        assert_eq!(merged.top(), &[0, 0, 1, 1]);
        assert!((modularity_barber(&g, &merged, 1.0).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn every_merge_raises_barber_modularity() {
        let edges = [
            (0, 0, 2),
            (1, 0, 1),
            (1, 1, 1),
            (2, 1, 3),
            (3, 2, 1),
            (2, 2, 1),
            (0, 2, 1),
        ];
        let g = BipartiteGraph::from_edges(4, 3, edges).unwrap();
        let initial = BipartitePartition::singletons(4, 3);
        let before = modularity_barber(&g, &initial, 1.0).unwrap();
        let merged = agglomerate_barber(&g, &initial, 1.0).unwrap();
        let after = modularity_barber(&g, &merged, 1.0).unwrap();
        assert!(after > before);
        // no single further merge helps
        let k = merged.community_count();
        for a in 0..k {
            for b in a + 1..k {
                let relabel = |c: usize| if c == b { a } else { c };
                let p = BipartitePartition::from_labels(
                    merged.bottom().iter().map(|&c| relabel(c)).collect(),
                    merged.top().iter().map(|&c| relabel(c)).collect(),
                );
                assert!(modularity_barber(&g, &p, 1.0).unwrap() <= after + 1e-12);
            }
        }
    }
}
