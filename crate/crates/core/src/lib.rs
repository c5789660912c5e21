//! Community detection on bipartite networks.
//!
//! The crate provides bipartite graphs and their weighted projections
//! ([`graph`]), three modularity objectives with a shared incremental
//! interface ([`modularity`]), a multi-level Louvain engine and five
//! detection pipelines ([`louvain`]), a planted-partition benchmark generator
//! ([`synth`]), partition-similarity scores ([`metrics`]), and the parameter
//! sweep driver behind the `bimod` command line tool ([`sweep`]).

pub mod error;
pub mod exec;
pub mod graph;
pub mod io;
pub mod louvain;
pub mod metrics;
pub mod modularity;
pub mod partition;
pub mod sweep;
pub mod synth;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{
    aggregate_bipartite, aggregate_projected, project, project_with, BipartiteGraph, ProjectedGraph, SelfLoops, Side,
};
pub use louvain::{best_of, detect, louvain, Algorithm, Assignment, DetectionResult, LouvainConfig, NodeOrder};
pub use metrics::{completeness, homogeneity, v_measure, SimilarityScores};
pub use modularity::{modularity_barber, modularity_projected, modularity_standard, Objective, ObjectiveKind};
pub use partition::{BipartitePartition, Partition};
