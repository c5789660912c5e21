//! Planted-partition bipartite benchmarks.
//!
//! Each of `C` blocks is an independent configuration-model bipartite graph
//! built from sampled degree sequences. A fraction `p` of all edges is then
//! cut, and the freed bottom and top stubs are re-paired uniformly at random
//! across the whole graph, which keeps every node's degree.

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::rng_from_seed;
use crate::graph::BipartiteGraph;
use crate::partition::BipartitePartition;

/// Degree distribution for one node set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum DegreeSpec {
    /// Poisson with the given mean; zeros are redrawn.
    Poisson { mean: f64 },
    /// `P(d) ∝ d^-exponent` on `min..=max`.
    Power { exponent: f64, min: u64, max: u64 },
}

impl DegreeSpec {
    pub fn poisson(mean: f64) -> Result<Self> {
        let spec = DegreeSpec::Poisson { mean };
        spec.validate()?;
        Ok(spec)
    }

    pub fn power(exponent: f64, min: u64, max: u64) -> Result<Self> {
        let spec = DegreeSpec::Power { exponent, min, max };
        spec.validate()?;
        Ok(spec)
    }

    /// Power law with the default cutoff for a set of `n` nodes:
    /// `max = ⌈√(n · mean)⌉`, capped at `n`, where `mean` is the mean of the
    /// law truncated to `min..=n`.
    pub fn power_with_cutoff(exponent: f64, min: u64, n: usize) -> Result<Self> {
        DegreeSpec::power(exponent, min, min.max(1))?;
        let n = (n as u64).max(min);
        let (mut num, mut den) = (0.0, 0.0);
        for d in min..=n {
            let w = (d as f64).powf(-exponent);
            num += d as f64 * w;
            den += w;
        }
        let max = ((n as f64 * num / den).sqrt().ceil() as u64).clamp(min, n);
        DegreeSpec::power(exponent, min, max)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            DegreeSpec::Poisson { mean } if !(mean.is_finite() && mean > 0.0) => Err(Error::InvalidParameter(format!(
                "poisson mean must be positive, got {mean}"
            ))),
            DegreeSpec::Power { exponent, .. } if !(exponent.is_finite() && exponent > 1.0) => Err(
                Error::InvalidParameter(format!("power-law exponent must exceed 1, got {exponent}")),
            ),
            DegreeSpec::Power { min, max, .. } if min < 1 || min > max => Err(Error::InvalidParameter(format!(
                "power-law support {min}..={max} is invalid"
            ))),
            _ => Ok(()),
        }
    }

    /// Parses `poisson:<mean>`, `power:<exp>`, `power:<exp>:<min>` or
    /// `power:<exp>:<min>:<max>`. Missing cutoffs use
    /// [`DegreeSpec::power_with_cutoff`] for a set of `n` nodes.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse degree spec {text:?}"));
        let mut parts = text.split(':');
        let family = parts.next().ok_or_else(bad)?;
        let nums: Vec<&str> = parts.collect();
        let float = |s: &str| s.parse::<f64>().map_err(|_| bad());
        let int = |s: &str| s.parse::<u64>().map_err(|_| bad());
        match (family, nums.as_slice()) {
            ("poisson", [mean]) => DegreeSpec::poisson(float(mean)?),
            ("power" | "powerlaw", [exp]) => DegreeSpec::power_with_cutoff(float(exp)?, 1, n),
            ("power" | "powerlaw", [exp, min]) => DegreeSpec::power_with_cutoff(float(exp)?, int(min)?, n),
            ("power" | "powerlaw", [exp, min, max]) => DegreeSpec::power(float(exp)?, int(min)?, int(max)?),
            _ => Err(bad()),
        }
    }

    /// Draws `n` degrees, all at least 1.
    pub fn sample(&self, n: usize, rng: &mut impl Rng) -> Vec<u64> {
        match *self {
            DegreeSpec::Poisson { mean } => {
                let dist = Poisson::new(mean).expect("validated mean");
                (0..n)
                    .map(|_| loop {
                        let d: f64 = dist.sample(rng);
                        if d >= 1.0 {
                            break d as u64;
                        }
                    })
                    .collect()
            }
            DegreeSpec::Power { exponent, min, max } => {
                let mut cdf = Vec::with_capacity((max - min + 1) as usize);
                let mut acc = 0.0;
                for d in min..=max {
                    acc += (d as f64).powf(-exponent);
                    cdf.push(acc);
                }
                (0..n)
                    .map(|_| {
                        let u = rng.random::<f64>() * acc;
                        let k = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
                        min + k as u64
                    })
                    .collect()
            }
        }
    }
}

impl std::fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeSpec::Poisson { mean } => write!(f, "poisson:{mean}"),
            DegreeSpec::Power { exponent, min, max } => write!(f, "power:{exponent}:{min}:{max}"),
        }
    }
}

/// Makes the two sequences sum to the same total by discarding random nodes
/// from the side with the larger sum. When the gap is smaller than every
/// degree on that side, one random degree there is reduced by the gap
/// instead, which ends the loop.
pub fn balance_sequences(mut q: Vec<u64>, mut d: Vec<u64>, rng: &mut impl Rng) -> Result<(Vec<u64>, Vec<u64>)> {
    if q.is_empty() || d.is_empty() {
        return Err(Error::GenerationFailure);
    }
    let mut sq: u64 = q.iter().sum();
    let mut sd: u64 = d.iter().sum();
    while sq != sd {
        let residual = sq.abs_diff(sd);
        let (larger, sum) = if sq > sd { (&mut q, &mut sq) } else { (&mut d, &mut sd) };
        if larger.iter().all(|&x| x > residual) {
            let k = rng.random_range(0..larger.len());
            larger[k] -= residual;
            *sum -= residual;
            break;
        }
        let k = rng.random_range(0..larger.len());
        *sum -= larger.swap_remove(k);
        if larger.is_empty() {
            return Err(Error::GenerationFailure);
        }
    }
    Ok((q, d))
}

/// Configuration-model pairing: bottom and top stubs are listed by degree,
/// the top list is shuffled, and stubs are paired by position. Repeated
/// pairs become multiplicities.
pub fn stub_match(q: &[u64], d: &[u64], rng: &mut impl Rng) -> Result<BipartiteGraph> {
    let total: u64 = q.iter().sum();
    if total != d.iter().sum::<u64>() {
        return Err(Error::InvalidParameter("degree sequences have different sums".into()));
    }
    let stubs = |degrees: &[u64]| -> Vec<usize> {
        degrees
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
            .collect()
    };
    let bottom = stubs(q);
    let mut top = stubs(d);
    top.shuffle(rng);
    BipartiteGraph::from_edges(q.len(), d.len(), bottom.into_iter().zip(top).map(|(i, j)| (i, j, 1)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub communities: usize,
    /// Bottom nodes drawn per community, before balancing.
    pub n_bottom: usize,
    pub n_top: usize,
    pub bottom: DegreeSpec,
    pub top: DegreeSpec,
    /// Fraction of edges cut and rewired globally.
    pub mixing: f64,
    pub seed: u64,
}

impl BenchmarkSpec {
    pub fn validate(&self) -> Result<()> {
        if self.communities == 0 {
            return Err(Error::InvalidParameter("need at least one community".into()));
        }
        if self.n_bottom == 0 || self.n_top == 0 {
            return Err(Error::InvalidParameter("communities need nodes on both sides".into()));
        }
        if !(0.0..=1.0).contains(&self.mixing) {
            return Err(Error::InvalidParameter(format!("mixing {} not in [0, 1]", self.mixing)));
        }
        self.bottom.validate()?;
        self.top.validate()
    }
}

#[derive(Debug, Clone)]
pub struct Benchmark {
    pub graph: BipartiteGraph,
    /// Planted communities; bottom and top nodes of block `c` carry label `c`.
    pub target: BipartitePartition,
    /// The disjoint union of the blocks before rewiring.
    pub planted: BipartiteGraph,
}

/// Balancing rarely empties a side; such blocks are redrawn this many times.
const BLOCK_ATTEMPTS: usize = 32;

fn build_block(spec: &BenchmarkSpec, rng: &mut impl Rng) -> Result<BipartiteGraph> {
    for _ in 0..BLOCK_ATTEMPTS {
        let q = spec.bottom.sample(spec.n_bottom, rng);
        let d = spec.top.sample(spec.n_top, rng);
        if let Ok((q, d)) = balance_sequences(q, d, rng) {
            return stub_match(&q, &d, rng);
        }
    }
    Err(Error::GenerationFailure)
}

pub fn generate(spec: &BenchmarkSpec) -> Result<Benchmark> {
    spec.validate()?;
    let mut rng = rng_from_seed(spec.seed);
    let mut edges = Vec::new();
    let (mut bottom_labels, mut top_labels) = (Vec::new(), Vec::new());
    for c in 0..spec.communities {
        let block = build_block(spec, &mut rng)?;
        let (bo, to) = (bottom_labels.len(), top_labels.len());
        edges.extend(block.edges().map(|(i, j, w)| (bo + i, to + j, w)));
        bottom_labels.resize(bo + block.n_bottom(), c);
        top_labels.resize(to + block.n_top(), c);
    }
    let (nb, nt) = (bottom_labels.len(), top_labels.len());
    let planted = BipartiteGraph::from_edges(nb, nt, edges)?;
    let target = BipartitePartition::from_labels(bottom_labels, top_labels);
    let graph = rewire(&planted, spec.mixing, &mut rng)?;
    Ok(Benchmark { graph, target, planted })
}

/// Cuts `round(p · F)` unit edges chosen without replacement and re-pairs
/// their stubs uniformly at random.
pub fn rewire(g: &BipartiteGraph, p: f64, rng: &mut impl Rng) -> Result<BipartiteGraph> {
    let units: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(i, j, w)| std::iter::repeat_n((i, j), w as usize))
        .collect();
    let cut = (p * units.len() as f64).round() as usize;
    if cut == 0 {
        return Ok(g.clone());
    }
    let mut removed = vec![false; units.len()];
    for k in index::sample(rng, units.len(), cut) {
        removed[k] = true;
    }
    let mut bottoms = Vec::with_capacity(cut);
    let mut tops = Vec::with_capacity(cut);
    let mut kept = Vec::with_capacity(units.len());
    for (&(i, j), &gone) in units.iter().zip(&removed) {
        if gone {
            bottoms.push(i);
            tops.push(j);
        } else {
            kept.push((i, j, 1));
        }
    }
    tops.shuffle(rng);
    kept.extend(bottoms.into_iter().zip(tops).map(|(i, j)| (i, j, 1)));
    BipartiteGraph::from_edges(g.n_bottom(), g.n_top(), kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_power_law() {
        let spec = DegreeSpec::power(2.5, 5, 5).unwrap();
        let mut rng = rng_from_seed(1);
        assert!(spec.sample(100, &mut rng).iter().all(|&d| d == 5));
    }

    #[test]
    fn specs_validate() {
        assert!(DegreeSpec::poisson(0.0).is_err());
        assert!(DegreeSpec::power(1.0, 1, 10).is_err());
        assert!(DegreeSpec::power(2.0, 0, 10).is_err());
        assert!(DegreeSpec::power(2.0, 11, 10).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(
            DegreeSpec::parse("poisson:5", 250).unwrap(),
            DegreeSpec::Poisson { mean: 5.0 }
        );
        assert_eq!(
            DegreeSpec::parse("power:3:1:1000", 250).unwrap(),
            DegreeSpec::Power {
                exponent: 3.0,
                min: 1,
                max: 1000
            }
        );
        let DegreeSpec::Power { max, .. } = DegreeSpec::parse("power:3", 250).unwrap() else {
            panic!()
        };
        assert!(max > 1 && max <= 250);
        assert!(DegreeSpec::parse("gauss:1", 10).is_err());
        assert!(DegreeSpec::parse("poisson", 10).is_err());
    }

    #[test]
    fn balance_examples() {
        let mut rng = rng_from_seed(0);
        assert_eq!(
            balance_sequences(vec![3], vec![1, 1, 1], &mut rng).unwrap(),
            (vec![3], vec![1, 1, 1])
        );
        let (q, d) = balance_sequences(vec![5, 5], vec![3, 3, 3], &mut rng).unwrap();
        assert!(q == vec![5, 4] || q == vec![4, 5], "{q:?}");
        assert_eq!(d, vec![3, 3, 3]);
    }

    #[test]
    fn balance_always_ends_equal_and_positive() {
        let spec = DegreeSpec::poisson(3.0).unwrap();
        for seed in 0..200 {
            let mut rng = rng_from_seed(seed);
            let q = spec.sample(20, &mut rng);
            let d = spec.sample(15, &mut rng);
            if let Ok((q, d)) = balance_sequences(q, d, &mut rng) {
                assert_eq!(q.iter().sum::<u64>(), d.iter().sum::<u64>());
                assert!(q.iter().chain(&d).all(|&x| x >= 1));
            }
        }
    }

    #[test]
    fn stub_match_examples() {
        let mut rng = rng_from_seed(0);
        let g = stub_match(&[1], &[1], &mut rng).unwrap();
        assert_eq!(g.weight(0, 0), 1);
        let g = stub_match(&[2], &[2], &mut rng).unwrap();
        assert_eq!(g.weight(0, 0), 2);
        assert_eq!(g.edge_count(), 1);
        let g = stub_match(&[1; 50], &[1; 50], &mut rng).unwrap();
        assert!(g.bottom_degrees().iter().chain(g.top_degrees()).all(|&k| k == 1));
        assert!(stub_match(&[2], &[1], &mut rng).is_err());
    }

    #[test]
    fn mixing_out_of_range_is_rejected() {
        let spec = BenchmarkSpec {
            communities: 2,
            n_bottom: 10,
            n_top: 10,
            bottom: DegreeSpec::Poisson { mean: 3.0 },
            top: DegreeSpec::Poisson { mean: 3.0 },
            mixing: 1.5,
            seed: 0,
        };
        assert!(generate(&spec).is_err());
    }

    #[test]
    fn zero_mixing_keeps_blocks_disjoint() {
        let spec = BenchmarkSpec {
            communities: 3,
            n_bottom: 30,
            n_top: 20,
            bottom: DegreeSpec::Poisson { mean: 3.0 },
            top: DegreeSpec::Poisson { mean: 4.0 },
            mixing: 0.0,
            seed: 11,
        };
        let b = generate(&spec).unwrap();
        assert_eq!(b.graph, b.planted);
        for (i, j, _) in b.graph.edges() {
            assert_eq!(b.target.bottom()[i], b.target.top()[j]);
        }
        assert_eq!(b.target.community_count(), 3);
    }
}
