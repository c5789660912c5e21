//! Parameter sweeps over the planted-partition benchmark.
//!
//! For every mixing value `p` and realisation, a benchmark graph is
//! generated, each selected pipeline is run best-of-`restarts`, and the
//! result is scored against the planted communities on the bottom nodes.
//! The planted partition itself is reported under the algorithm name
//! `target`. Cells run concurrently but rows are emitted ordered by
//! `(p, realisation, algorithm)`, and every random stream is derived from the
//! master seed, so a sweep is reproducible byte for byte.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{mix_seed, Execution};
use crate::graph::{aggregate_bipartite, project, project_with, BipartiteGraph, SelfLoops, Side};
use crate::louvain::{detect, Algorithm, LouvainConfig};
use crate::metrics::{bootstrap_ci, mean, v_measure, BootstrapConfig};
use crate::modularity::{modularity_barber, modularity_projected, modularity_standard, Objective};
use crate::partition::{BipartitePartition, Partition};
use crate::synth::{generate, BenchmarkSpec, DegreeSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub communities: usize,
    pub n_bottom: usize,
    pub n_top: usize,
    /// Degree spec strings, e.g. `poisson:5` or `power:3:1:1000`.
    pub bottom: String,
    pub top: String,
    pub p_values: Vec<f64>,
    pub realisations: usize,
    pub restarts: usize,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
    pub resolution: f64,
    pub bootstrap_resamples: usize,
    /// Adds a wall-clock column; output is then no longer reproducible.
    pub timings: bool,
    pub execution: Execution,
    /// Diagonal handling for every projection, in detection and scoring.
    pub self_loops: SelfLoops,
    pub output: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            communities: 4,
            n_bottom: 250,
            n_top: 250,
            bottom: "poisson:5".into(),
            top: "poisson:5".into(),
            p_values: (0..=12).map(|k| k as f64 / 20.0).collect(),
            realisations: 100,
            restarts: 10,
            algorithms: Algorithm::BIPARTITE.to_vec(),
            seed: 0,
            resolution: 1.0,
            bootstrap_resamples: 10_000,
            timings: false,
            execution: Execution::default(),
            self_loops: SelfLoops::Keep,
            output: None,
        }
    }
}

impl SweepConfig {
    pub fn degree_specs(&self) -> Result<(DegreeSpec, DegreeSpec)> {
        Ok((
            DegreeSpec::parse(&self.bottom, self.n_bottom)?,
            DegreeSpec::parse(&self.top, self.n_top)?,
        ))
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |m: &str| Err(Error::InvalidParameter(m.into()));
        if self.p_values.is_empty() {
            return invalid("p_values must not be empty");
        }
        if self.p_values.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return invalid("p_values must lie in [0, 1]");
        }
        if self.realisations == 0 {
            return invalid("realisations must be at least 1");
        }
        if self.restarts == 0 {
            return invalid("restarts must be at least 1");
        }
        if self.algorithms.is_empty() {
            return invalid("algorithms must not be empty");
        }
        if self.algorithms.contains(&Algorithm::Louvain) {
            return invalid("plain louvain is not a bipartite pipeline");
        }
        Objective::new(crate::modularity::ObjectiveKind::Standard, self.resolution)?;
        self.degree_specs()?;
        self.benchmark_spec(0.0, 0)?.validate()
    }

    pub fn benchmark_spec(&self, mixing: f64, seed: u64) -> Result<BenchmarkSpec> {
        let (bottom, top) = self.degree_specs()?;
        Ok(BenchmarkSpec {
            communities: self.communities,
            n_bottom: self.n_bottom,
            n_top: self.n_top,
            bottom,
            top,
            mixing,
            seed,
        })
    }

    /// Realisation `r` uses the same planted blocks at every `p`; only the
    /// rewiring differs.
    pub fn realisation_seed(&self, realisation: usize) -> u64 {
        mix_seed(self.seed, realisation as u64)
    }

    pub fn detection_seed(&self, p_index: usize, realisation: usize, algorithm: usize) -> u64 {
        mix_seed(
            mix_seed(self.realisation_seed(realisation), p_index as u64),
            algorithm as u64 + 1,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub bottom: String,
    pub top: String,
    pub p: f64,
    pub realisation: usize,
    pub algorithm: String,
    /// Standard modularity of the bottom assignment on the bottom projection.
    pub q_standard: f64,
    /// Barber modularity, for assignments covering both sides.
    pub q_barber: Option<f64>,
    /// Projected modularity of the bottom assignment.
    pub q_projected: f64,
    pub communities: usize,
    pub homogeneity: f64,
    pub completeness: f64,
    pub v_measure: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub p: f64,
    pub algorithm: String,
    pub metric: String,
    pub n: usize,
    pub mean: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    pub summary: Vec<SummaryRow>,
}

/// `Q_P` computed a second way: collapse the bipartite graph by the bottom
/// communities, project, and read `Σ_in^c` off the diagonal.
pub fn projected_via_collapse(g: &BipartiteGraph, bottom: &Partition, resolution: f64) -> Result<f64> {
    let k = bottom.community_count();
    let joint = BipartitePartition::from_labels(bottom.labels().to_vec(), (0..g.n_top()).map(|j| k + j).collect());
    let collapsed = project(&aggregate_bipartite(g, &joint)?.graph, Side::Bottom);
    let f = g.total_weight() as f64;
    let two_e = collapsed.two_e() as f64;
    let sidecar = collapsed.sidecar().ok_or(Error::MissingSidecar)?;
    Ok((0..k)
        .map(|c| {
            let q = sidecar.degrees[c] as f64 / f;
            collapsed.self_loop(c) as f64 / two_e - resolution * q * q
        })
        .sum())
}

/// Rows with `cell_index % SPOT_CHECK_STRIDE == 0` get their `Q_P`
/// recomputed through [`projected_via_collapse`].
const SPOT_CHECK_STRIDE: usize = 100;

#[allow(clippy::too_many_arguments)]
fn score(
    cfg: &SweepConfig,
    g: &BipartiteGraph,
    target_bottom: &[usize],
    p: f64,
    realisation: usize,
    algorithm: &str,
    bottom: &Partition,
    bipartite: Option<&BipartitePartition>,
    communities: usize,
    wall_ms: Option<f64>,
) -> Result<SweepRow> {
    let projection = project_with(g, Side::Bottom, cfg.self_loops);
    let s = v_measure(target_bottom, bottom.labels())?;
    let q_barber = bipartite
        .map(|bp| modularity_barber(g, bp, cfg.resolution))
        .transpose()?;
    Ok(SweepRow {
        bottom: cfg.bottom.clone(),
        top: cfg.top.clone(),
        p,
        realisation,
        algorithm: algorithm.to_string(),
        q_standard: modularity_standard(&projection, bottom, cfg.resolution)?,
        q_barber,
        q_projected: modularity_projected(&projection, bottom, cfg.resolution)?,
        communities,
        homogeneity: s.homogeneity,
        completeness: s.completeness,
        v_measure: s.v_measure,
        wall_ms,
    })
}

fn run_cell(cfg: &SweepConfig, p_index: usize, realisation: usize) -> Result<Vec<SweepRow>> {
    let p = cfg.p_values[p_index];
    let bench = generate(&cfg.benchmark_spec(p, cfg.realisation_seed(realisation))?)?;
    let g = &bench.graph;
    let target_bottom = bench.target.bottom().to_vec();
    let mut rows = Vec::with_capacity(cfg.algorithms.len() + 1);
    let mut bottoms = Vec::with_capacity(cfg.algorithms.len());
    rows.push(score(
        cfg,
        g,
        &target_bottom,
        p,
        realisation,
        "target",
        &bench.target.bottom_restriction(),
        Some(&bench.target),
        bench.target.community_count(),
        None,
    )?);
    for (a, &algorithm) in cfg.algorithms.iter().enumerate() {
        let louvain = LouvainConfig {
            objective: Objective {
                resolution: cfg.resolution,
                ..Objective::default()
            },
            seed: cfg.detection_seed(p_index, realisation, a),
            restarts: cfg.restarts,
            execution: cfg.execution,
            self_loops: cfg.self_loops,
            ..LouvainConfig::default()
        };
        let start = Instant::now();
        let result = detect(algorithm, g, &louvain)?;
        let wall_ms = cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        let bottom = result.assignment.bottom();
        let row = score(
            cfg,
            g,
            &target_bottom,
            p,
            realisation,
            algorithm.name(),
            &bottom,
            result.assignment.as_bipartite(),
            result.community_count(),
            wall_ms,
        )?;
        rows.push(row);
        bottoms.push(bottom);
    }
    let cell = p_index * cfg.realisations + realisation;
    // The collapse route assumes the diagonal is kept.
    if cell.is_multiple_of(SPOT_CHECK_STRIDE) && cfg.self_loops == SelfLoops::Keep {
        for (row, bottom) in rows[1..].iter().zip(&bottoms) {
            let check = projected_via_collapse(g, bottom, cfg.resolution)?;
            if (check - row.q_projected).abs() > 1e-9 {
                return Err(Error::InvalidParameter(format!(
                    "Q_P spot check failed for {} at p={p}, realisation {realisation}: {} vs {check}",
                    row.algorithm, row.q_projected
                )));
            }
        }
    }
    Ok(rows)
}

const SUMMARY_METRICS: [&str; 7] = [
    "q_standard",
    "q_barber",
    "q_projected",
    "communities",
    "homogeneity",
    "completeness",
    "v_measure",
];

fn metric(row: &SweepRow, name: &str) -> Option<f64> {
    match name {
        "q_standard" => Some(row.q_standard),
        "q_barber" => row.q_barber,
        "q_projected" => Some(row.q_projected),
        "communities" => Some(row.communities as f64),
        "homogeneity" => Some(row.homogeneity),
        "completeness" => Some(row.completeness),
        "v_measure" => Some(row.v_measure),
        _ => None,
    }
}

/// Per-`(p, algorithm, metric)` means with percentile bootstrap intervals.
pub fn summarize(cfg: &SweepConfig, rows: &[SweepRow]) -> Result<Vec<SummaryRow>> {
    let mut algorithms = vec!["target".to_string()];
    algorithms.extend(cfg.algorithms.iter().map(|a| a.name().to_string()));
    let mut out = Vec::new();
    for (pi, &p) in cfg.p_values.iter().enumerate() {
        for (ai, algorithm) in algorithms.iter().enumerate() {
            for (mi, name) in SUMMARY_METRICS.iter().enumerate() {
                let samples: Vec<f64> = rows
                    .iter()
                    .filter(|r| r.p == p && &r.algorithm == algorithm)
                    .filter_map(|r| metric(r, name))
                    .collect();
                if samples.is_empty() {
                    continue;
                }
                let m = mean(&samples);
                let (ci_low, ci_high) = if samples.len() >= 2 {
                    let boot = BootstrapConfig {
                        resamples: cfg.bootstrap_resamples,
                        seed: mix_seed(cfg.seed, ((pi * 64 + ai) * 16 + mi) as u64 + (1 << 40)),
                        execution: cfg.execution,
                        ..BootstrapConfig::default()
                    };
                    bootstrap_ci(&samples, &boot)?
                } else {
                    (m, m)
                };
                out.push(SummaryRow {
                    p,
                    algorithm: algorithm.clone(),
                    metric: name.to_string(),
                    n: samples.len(),
                    mean: m,
                    ci_low,
                    ci_high,
                });
            }
        }
    }
    Ok(out)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutput> {
    cfg.validate()?;
    let cells = cfg.p_values.len() * cfg.realisations;
    let per_cell = cfg
        .execution
        .map(cells, |k| run_cell(cfg, k / cfg.realisations, k % cfg.realisations));
    let mut rows = Vec::with_capacity(cells * (cfg.algorithms.len() + 1));
    for cell in per_cell {
        rows.extend(cell?);
    }
    let summary = summarize(cfg, &rows)?;
    Ok(SweepOutput { rows, summary })
}

fn write_csv<T: Serialize, W: Write>(items: &[T], sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    for item in items {
        w.serialize(item)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_rows<W: Write>(rows: &[SweepRow], sink: W) -> Result<()> {
    write_csv(rows, sink)
}

pub fn write_summary<W: Write>(summary: &[SummaryRow], sink: W) -> Result<()> {
    write_csv(summary, sink)
}
