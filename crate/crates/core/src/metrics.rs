//! Entropy-based partition similarity (homogeneity, completeness, V-measure)
//! and percentile bootstrap intervals.
//!
//! `target` labels are the classes, `found` labels the clusters. A clustering
//! is homogeneous when every cluster holds members of one class only, and
//! complete when every class falls inside one cluster. Entropies use natural
//! logarithms; a score whose reference entropy is zero is defined as 1.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{mix_seed, rng_from_seed, Execution};

/// Joint counts of (class, cluster) label pairs.
#[derive(Debug, Clone)]
pub struct ContingencyTable {
    counts: BTreeMap<(usize, usize), usize>,
    class_totals: BTreeMap<usize, usize>,
    cluster_totals: BTreeMap<usize, usize>,
    n: usize,
}

impl ContingencyTable {
    pub fn new(classes: &[usize], clusters: &[usize]) -> Result<Self> {
        if classes.len() != clusters.len() {
            return Err(Error::LengthMismatch(classes.len(), clusters.len()));
        }
        let mut table = ContingencyTable {
            counts: BTreeMap::new(),
            class_totals: BTreeMap::new(),
            cluster_totals: BTreeMap::new(),
            n: classes.len(),
        };
        for (&t, &s) in classes.iter().zip(clusters) {
            *table.counts.entry((t, s)).or_default() += 1;
            *table.class_totals.entry(t).or_default() += 1;
            *table.cluster_totals.entry(s).or_default() += 1;
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn count(&self, class: usize, cluster: usize) -> usize {
        self.counts.get(&(class, cluster)).copied().unwrap_or(0)
    }

    fn entropy(totals: &BTreeMap<usize, usize>, n: usize) -> f64 {
        let n = n as f64;
        -totals
            .values()
            .map(|&c| c as f64 / n * (c as f64 / n).ln())
            .sum::<f64>()
    }

    /// `H(class)`
    pub fn class_entropy(&self) -> f64 {
        Self::entropy(&self.class_totals, self.n)
    }

    /// `H(cluster)`
    pub fn cluster_entropy(&self) -> f64 {
        Self::entropy(&self.cluster_totals, self.n)
    }

    /// `H(class | cluster)`
    pub fn class_given_cluster(&self) -> f64 {
        let n = self.n as f64;
        -self
            .counts
            .iter()
            .map(|(&(_, s), &c)| c as f64 / n * (c as f64 / self.cluster_totals[&s] as f64).ln())
            .sum::<f64>()
    }

    /// `H(cluster | class)`, summed in (cluster, class) order so that it
    /// equals `H(class | cluster)` of the transposed table bit for bit.
    pub fn cluster_given_class(&self) -> f64 {
        let n = self.n as f64;
        let mut cells: Vec<_> = self.counts.iter().map(|(&(t, s), &c)| ((s, t), c)).collect();
        cells.sort_unstable();
        -cells
            .into_iter()
            .map(|((_, t), c)| c as f64 / n * (c as f64 / self.class_totals[&t] as f64).ln())
            .sum::<f64>()
    }

    pub fn homogeneity(&self) -> f64 {
        let h = self.class_entropy();
        if h <= 0.0 {
            return 1.0;
        }
        (1.0 - self.class_given_cluster() / h).clamp(0.0, 1.0)
    }

    pub fn completeness(&self) -> f64 {
        let h = self.cluster_entropy();
        if h <= 0.0 {
            return 1.0;
        }
        (1.0 - self.cluster_given_class() / h).clamp(0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityScores {
    pub homogeneity: f64,
    pub completeness: f64,
    pub v_measure: f64,
}

impl SimilarityScores {
    fn from_parts(homogeneity: f64, completeness: f64) -> Self {
        let sum = homogeneity + completeness;
        let v_measure = if sum > 0.0 {
            2.0 * homogeneity * completeness / sum
        } else {
            0.0
        };
        SimilarityScores {
            homogeneity,
            completeness,
            v_measure,
        }
    }

    /// The scores with the roles of target and found exchanged.
    pub fn swapped(self) -> Self {
        SimilarityScores {
            homogeneity: self.completeness,
            completeness: self.homogeneity,
            ..self
        }
    }
}

fn nonempty(target: &[usize], found: &[usize]) -> Result<ContingencyTable> {
    let table = ContingencyTable::new(target, found)?;
    if table.is_empty() {
        return Err(Error::TooFewSamples { needed: 1, got: 0 });
    }
    Ok(table)
}

pub fn homogeneity(target: &[usize], found: &[usize]) -> Result<f64> {
    Ok(nonempty(target, found)?.homogeneity())
}

/// Equal to `homogeneity(found, target)`.
pub fn completeness(target: &[usize], found: &[usize]) -> Result<f64> {
    homogeneity(found, target)
}

pub fn v_measure(target: &[usize], found: &[usize]) -> Result<SimilarityScores> {
    let table = nonempty(target, found)?;
    Ok(SimilarityScores::from_parts(table.homogeneity(), table.completeness()))
}

/// Percentile bootstrap interval for the mean of `samples`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BootstrapConfig {
    pub level: f64,
    pub resamples: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl Default for BootstrapConfig {
    fn default() -> Self {
        BootstrapConfig {
            level: 0.95,
            resamples: 10_000,
            seed: 0,
            execution: Execution::default(),
        }
    }
}

/// Returns `(low, high)`. Resample `r` draws from its own stream derived from
/// `cfg.seed`, so the interval does not depend on the execution policy.
pub fn bootstrap_ci(samples: &[f64], cfg: &BootstrapConfig) -> Result<(f64, f64)> {
    if samples.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    if !(cfg.level > 0.0 && cfg.level < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "confidence level {} not in (0, 1)",
            cfg.level
        )));
    }
    if cfg.resamples == 0 {
        return Err(Error::InvalidParameter("resamples must be positive".into()));
    }
    let n = samples.len();
    let mut means = cfg.execution.map(cfg.resamples, |r| {
        let mut rng = rng_from_seed(mix_seed(cfg.seed, r as u64));
        (0..n).map(|_| samples[rng.random_range(0..n)]).sum::<f64>() / n as f64
    });
    means.sort_by(f64::total_cmp);
    let b = means.len();
    let alpha = (1.0 - cfg.level) / 2.0;
    let lo = ((alpha * b as f64).floor() as usize).min(b - 1);
    let hi = (((1.0 - alpha) * b as f64).ceil() as usize).clamp(1, b) - 1;
    Ok((means[lo], means[hi.max(lo)]))
}

pub fn mean(samples: &[f64]) -> f64 {
    if samples.is_empty() {
        return f64::NAN;
    }
    samples.iter().sum::<f64>() / samples.len() as f64
}
