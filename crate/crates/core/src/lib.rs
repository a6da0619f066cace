//! Deterministic simulator for trust-aware cluster-head election in
//! wireless sensor networks.
//!
//! The library models a field of battery-powered sensor nodes, some of them
//! blackhole droppers, and runs round-based data collection under one of two
//! election pipelines:
//!
//! * **DCHFC** — drop streaks feed an exponential trust factor that expels
//!   misbehaving nodes; the survivors are ranked by a Mamdani fuzzy
//!   *Potential* (residual energy, reachability, reception power) and heads
//!   are admitted greedily under a minimum mutual-distance constraint.
//! * **CHUFL baseline** — the classic scheme: the top fixed percentage by
//!   Potential becomes heads, with no trust filter and no spacing rule.
//!
//! Everything after the seeded topology generation is deterministic, so a
//! `(config, seed)` pair always reproduces the same run byte for byte.
//!
//! Module map: [`topology`] (field, nodes, link quality), [`trust`]
//! (drop-streak detection), [`fuzzy`] (Mamdani engine), [`potential`]
//! (input extraction and scoring), [`election`] (head selection and
//! clustering), [`simulation`] (rounds, energy, metrics, comparisons),
//! [`config`] (TOML + override loading).

pub mod config;
pub mod election;
pub mod fuzzy;
pub mod potential;
pub mod simulation;
pub mod topology;
pub mod trust;

pub use config::{ConfigError, SimConfig};
pub use election::{
    assign_clusters, select_heads_chufl, select_heads_dchfc, ElectionConfig, ElectionError,
    ElectionResult, Rounding,
};
pub use fuzzy::{FuzzyConfig, FuzzyError, LinguisticVariable, Rule, RuleBase, Trapezoid};
pub use potential::{reachability, reception_power, score_all, NodeInputs, PotentialScore};
pub use simulation::{
    compare, election_csv, run_simulation, ComparisonReport, ElectionRow, EnergyModel,
    LifetimeReport, Mode, Role, RoundMetrics, RunSummary, SeedComparison, SimError, SimRun,
    Simulation,
};
pub use topology::{Node, NodeId, NodeStatus, Position, Topology};
pub use trust::{detect_malicious, trust_factor, TrustConfig};
