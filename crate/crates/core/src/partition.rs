//! Community assignments over one node set or over both sides of a
//! bipartite graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relabels `labels` to `0..k` in order of first appearance.
fn compact<'a>(labels: impl IntoIterator<Item = &'a mut usize>, map: &mut HashMap<usize, usize>) {
    for label in labels {
        let next = map.len();
        *label = *map.entry(*label).or_insert(next);
    }
}

/// Node → community map with dense labels `0..community_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    labels: Vec<usize>,
    community_count: usize,
}

impl Partition {
    /// Builds a partition from arbitrary labels, renumbering them densely in
    /// order of first appearance.
    pub fn from_labels(mut labels: Vec<usize>) -> Self {
        let mut map = HashMap::new();
        compact(labels.iter_mut(), &mut map);
        Partition {
            labels,
            community_count: map.len(),
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
            community_count: n,
        }
    }

    /// Every node in one community.
    pub fn single(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
            community_count: usize::from(n > 0),
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, node: usize) -> usize {
        self.labels[node]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    /// Member lists indexed by community label.
    pub fn communities(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.community_count];
        for (node, &c) in self.labels.iter().enumerate() {
            out[c].push(node);
        }
        out
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.labels.len() != n {
            return Err(Error::PartitionSize {
                expected: n,
                got: self.labels.len(),
            });
        }
        Ok(())
    }
}

/// Joint assignment of bottom and top nodes drawn from one label namespace,
/// so a community may hold nodes of either or both kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartitePartition {
    bottom: Vec<usize>,
    top: Vec<usize>,
    community_count: usize,
}

impl BipartitePartition {
    /// Renumbers labels densely, bottoms first, then tops.
    pub fn from_labels(mut bottom: Vec<usize>, mut top: Vec<usize>) -> Self {
        let mut map = HashMap::new();
        compact(bottom.iter_mut().chain(top.iter_mut()), &mut map);
        BipartitePartition {
            bottom,
            top,
            community_count: map.len(),
        }
    }

    /// Each node of either side alone.
    pub fn singletons(n_bottom: usize, n_top: usize) -> Self {
        BipartitePartition {
            bottom: (0..n_bottom).collect(),
            top: (n_bottom..n_bottom + n_top).collect(),
            community_count: n_bottom + n_top,
        }
    }

    pub fn single(n_bottom: usize, n_top: usize) -> Self {
        BipartitePartition {
            bottom: vec![0; n_bottom],
            top: vec![0; n_top],
            community_count: usize::from(n_bottom + n_top > 0),
        }
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    /// The assignment of bottom nodes alone, relabelled densely.
    pub fn bottom_restriction(&self) -> Partition {
        Partition::from_labels(self.bottom.clone())
    }

    pub fn top_restriction(&self) -> Partition {
        Partition::from_labels(self.top.clone())
    }

    pub(crate) fn check_len(&self, n_bottom: usize, n_top: usize) -> Result<()> {
        if self.bottom.len() != n_bottom {
            return Err(Error::PartitionSize {
                expected: n_bottom,
                got: self.bottom.len(),
            });
        }
        if self.top.len() != n_top {
            return Err(Error::PartitionSize {
                expected: n_top,
                got: self.top.len(),
            });
        }
        Ok(())
    }
}
