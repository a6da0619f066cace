//! Round-based network simulation: traffic, energy drain, malicious drops,
//! per-round re-election and the resulting packet/energy/lifetime metrics.
//!
//! One round runs the full pipeline — detection (DCHFC only, after the
//! warm-up), Potential scoring, head election, cluster assignment, member
//! traffic, head forwarding, death sweep — and is completely deterministic:
//! the only randomness in a run is the seeded topology generation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{ConfigError, SimConfig};
use crate::election::{assign_clusters, select_heads_chufl, select_heads_dchfc, ElectionResult};
use crate::fuzzy::{FuzzyError, RuleBase};
use crate::potential::{score_all, PotentialScore};
use crate::topology::{NodeId, NodeStatus, Topology};
use crate::trust::detect_malicious;

/// Which election pipeline a round runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Trust-based detection, fuzzy scoring, spatially filtered election.
    Dchfc,
    /// CHUFL baseline: fixed top percentage by Potential, no spacing filter
    /// and no malicious detection at all.
    ChuflBaseline,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Dchfc => "dchfc",
            Mode::ChuflBaseline => "chufl",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dchfc" => Ok(Mode::Dchfc),
            "chufl" | "chufl-baseline" => Ok(Mode::ChuflBaseline),
            other => Err(format!("unknown mode `{other}` (expected dchfc or chufl)")),
        }
    }
}

/// First-order radio model plus the shared battery budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EnergyModel {
    /// Electronics cost, joules per bit (transmit and receive).
    pub e_elec: f64,
    /// Amplifier cost, joules per bit per square meter.
    pub eps_amp: f64,
    /// Data packet size in bits.
    pub packet_bits: u32,
    /// Starting battery per node, joules.
    pub initial_energy: f64,
    /// Per-node per-round cost of computing scores in-network. Zero by
    /// default (the cloud pays); set it to emulate CHUFL's on-node fuzzy
    /// computation. Charged in baseline mode only.
    pub chufl_compute_cost: f64,
}

impl Default for EnergyModel {
    fn default() -> Self {
        Self {
            e_elec: 50e-9,
            eps_amp: 10e-12,
            packet_bits: 2000,
            initial_energy: 0.5,
            chufl_compute_cost: 0.0,
        }
    }
}

impl EnergyModel {
    /// Cost of transmitting `bits` over `d` meters:
    /// `e_elec*bits + eps_amp*bits*d^2`.
    pub fn tx_cost(&self, bits: u32, d: f64) -> f64 {
        let b = bits as f64;
        self.e_elec * b + self.eps_amp * b * d * d
    }

    /// Cost of receiving `bits`: `e_elec*bits`.
    pub fn rx_cost(&self, bits: u32) -> f64 {
        self.e_elec * bits as f64
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.e_elec <= 0.0 || self.eps_amp <= 0.0 {
            return Err(ConfigError::invalid("energy.e_elec/eps_amp", "must be positive"));
        }
        if self.packet_bits == 0 {
            return Err(ConfigError::invalid("energy.packet_bits", "must be positive"));
        }
        if self.initial_energy <= 0.0 {
            return Err(ConfigError::invalid("energy.initial_energy", "must be positive"));
        }
        if self.chufl_compute_cost < 0.0 {
            return Err(ConfigError::invalid("energy.chufl_compute_cost", "must be >= 0"));
        }
        Ok(())
    }
}

/// Packet and energy counters for one simulated round.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundMetrics {
    /// 1-based round index.
    pub round: u32,
    /// Data packets offered by honest members this round.
    pub packets_offered: u64,
    /// Member packets that reached the sink inside a head's aggregate.
    pub packets_delivered: u64,
    /// Member packets dropped by malicious heads or lost to dead radios.
    pub packets_lost: u64,
    /// Packets delivered per round — the delivered count as a rate.
    pub throughput: f64,
    /// Sum of node energies after the round.
    pub total_residual_energy: f64,
    /// Total energy charged this round; closes the ledger against the
    /// previous round's residual.
    pub energy_spent: f64,
    /// Nodes whose batteries are not exhausted (detected malicious nodes
    /// still count: they are removed from the protocol, not out of charge).
    pub alive_count: usize,
}

/// Network lifetime milestones, `None` when not reached within the horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LifetimeReport {
    /// First node dies.
    pub fnd: Option<u32>,
    /// Alive count first drops to half the starting population or below.
    pub hna: Option<u32>,
    /// Last node dies.
    pub lnd: Option<u32>,
}

/// A node's part in one election round, for the election dump.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    InitialHead,
    SpatialHead,
    Member,
    Rejected,
    Malicious,
    Dead,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::InitialHead => "initial-head",
            Role::SpatialHead => "spatial-head",
            Role::Member => "member",
            Role::Rejected => "rejected",
            Role::Malicious => "malicious",
            Role::Dead => "dead",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElectionRow {
    pub node_id: NodeId,
    /// Potential this round; absent for malicious and dead nodes.
    pub potential: Option<f64>,
    pub role: Role,
    pub assigned_head: Option<NodeId>,
}

/// CSV dump of one round's election: `round,node_id,potential,role,assigned_head`.
pub fn election_csv(round: u32, rows: &[ElectionRow]) -> String {
    let mut out = String::from("round,node_id,potential,role,assigned_head\n");
    for r in rows {
        out.push_str(&format!(
            "{round},{},{},{},{}\n",
            r.node_id,
            r.potential.map(|p| p.to_string()).unwrap_or_default(),
            r.role.as_str(),
            r.assigned_head.map(|h| h.to_string()).unwrap_or_default(),
        ));
    }
    out
}

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// A full run: the per-round series plus lifetime milestones.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRun {
    pub rounds: Vec<RoundMetrics>,
    pub lifetime: LifetimeReport,
    /// Sum of node energies before round 1.
    pub initial_total_energy: f64,
    pub initial_node_count: usize,
}

impl SimRun {
    /// Total residual energy after `round` (0 means before round 1). Rounds
    /// past the end of the series carry the final residual forward.
    pub fn residual_at(&self, round: u32) -> f64 {
        if round == 0 || self.rounds.is_empty() {
            return self.initial_total_energy;
        }
        let idx = (round as usize).min(self.rounds.len()) - 1;
        self.rounds[idx].total_residual_energy
    }

    /// Condenses the run for cross-seed comparison. `max_rounds` is the
    /// configured horizon: throughput is averaged over it (not over the
    /// possibly shorter series) so early network death is not rewarded.
    pub fn summary(&self, max_rounds: u32) -> RunSummary {
        let delivered: u64 = self.rounds.iter().map(|r| r.packets_delivered).sum();
        let lost: u64 = self.rounds.iter().map(|r| r.packets_lost).sum();
        let offered: u64 = self.rounds.iter().map(|r| r.packets_offered).sum();
        RunSummary {
            total_offered: offered,
            total_delivered: delivered,
            cumulative_loss: lost,
            mean_throughput: if max_rounds == 0 {
                0.0
            } else {
                delivered as f64 / max_rounds as f64
            },
            final_residual: self.residual_at(u32::MAX),
            lifetime: self.lifetime,
        }
    }
}

/// Per-run aggregate used in comparison reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunSummary {
    pub total_offered: u64,
    pub total_delivered: u64,
    pub cumulative_loss: u64,
    pub mean_throughput: f64,
    pub final_residual: f64,
    pub lifetime: LifetimeReport,
}

/// One simulated network. Owns the topology and mutates it round by round.
#[derive(Debug, Clone)]
pub struct Simulation {
    cfg: SimConfig,
    rb: RuleBase,
    topo: Topology,
    rounds_run: u32,
    initial_node_count: usize,
    initial_total_energy: f64,
    fnd: Option<u32>,
    hna: Option<u32>,
    lnd: Option<u32>,
    last_election: Option<(u32, Vec<ElectionRow>)>,
    snapshot: Option<(u32, Vec<ElectionRow>)>,
}

impl Simulation {
    /// Generates a fresh topology from `(cfg, seed)` and prepares a run.
    pub fn new(cfg: &SimConfig, seed: u64) -> Result<Self, ConfigError> {
        let topo = Topology::generate(cfg, seed)?;
        Self::with_topology(cfg, topo)
    }

    /// Prepares a run over an existing topology (tests, CSV imports,
    /// comparisons over a shared seed). The topology's node count wins over
    /// `cfg.node_count` everywhere that matters.
    pub fn with_topology(cfg: &SimConfig, topo: Topology) -> Result<Self, ConfigError> {
        cfg.validate()?;
        let rb = RuleBase::from_config(&cfg.fuzzy)?;
        Ok(Self {
            cfg: cfg.clone(),
            rb,
            initial_node_count: topo.nodes.len(),
            initial_total_energy: topo.nodes.iter().map(|n| n.energy).sum(),
            topo,
            rounds_run: 0,
            fnd: None,
            hna: None,
            lnd: None,
            last_election: None,
            snapshot: None,
        })
    }

    pub fn topology(&self) -> &Topology {
        &self.topo
    }

    pub fn config(&self) -> &SimConfig {
        &self.cfg
    }

    pub fn rounds_run(&self) -> u32 {
        self.rounds_run
    }

    pub fn lifetime(&self) -> LifetimeReport {
        LifetimeReport { fnd: self.fnd, hna: self.hna, lnd: self.lnd }
    }

    /// Election dump rows: the round right after the warm-up (the first one
    /// with detection in effect) when available, otherwise the latest round.
    pub fn election_rows(&self) -> Option<(u32, &[ElectionRow])> {
        self.snapshot
            .as_ref()
            .or(self.last_election.as_ref())
            .map(|(round, rows)| (*round, rows.as_slice()))
    }

    /// Runs one round of the given mode. Returns `Ok(None)` when the network
    /// can no longer operate — every node dead, or no eligible node left to
    /// elect (only detected-malicious batteries remain).
    pub fn run_round(&mut self, mode: Mode) -> Result<Option<RoundMetrics>, SimError> {
        if self.topo.alive_count() == 0 {
            return Ok(None);
        }
        let round = self.rounds_run + 1;
        let em = self.cfg.energy;
        let bits = em.packet_bits;

        // last round's heads step down
        for n in &mut self.topo.nodes {
            if n.status == NodeStatus::ClusterHead {
                n.status = NodeStatus::Alive;
            }
        }

        // (a) trust-based detection, DCHFC only, once the warm-up elapsed
        if mode == Mode::Dchfc && round > self.cfg.trust.warmup_rounds {
            detect_malicious(&mut self.topo, &self.cfg.trust);
        }

        // (b) Potential scoring over alive, non-detected nodes
        let scores = score_all(&self.topo, &self.rb, &self.cfg)?;
        if scores.is_empty() {
            return Ok(None);
        }

        let mut spent = 0.0;

        // in-network scoring cost, when configured (baseline emulation)
        if mode == Mode::ChuflBaseline && em.chufl_compute_cost > 0.0 {
            for s in &scores {
                let node = self.topo.node_mut(s.node_id);
                let c = em.chufl_compute_cost.min(node.energy);
                node.energy -= c;
                spent += c;
            }
        }

        // (c) head election per mode
        let (heads, initial_count, rejected) = match mode {
            Mode::Dchfc => select_heads_dchfc(&scores, &self.topo, &self.cfg.election)
                .expect("scores checked non-empty"),
            Mode::ChuflBaseline => {
                let heads =
                    select_heads_chufl(&scores, self.topo.nodes.len(), &self.cfg.election)
                        .expect("scores checked non-empty");
                let n = heads.len();
                (heads, n, Vec::new())
            }
        };

        // (d) every other alive node joins its nearest head
        let (assignment, out_of_range) = assign_clusters(&self.topo, &heads);
        for &h in &heads {
            self.topo.node_mut(h).status = NodeStatus::ClusterHead;
        }
        let election = ElectionResult {
            heads: heads.clone(),
            initial_count,
            assignment: assignment.clone(),
            rejected,
            out_of_range,
        };
        let rows = self.build_rows(&scores, &election);
        if round == self.cfg.trust.warmup_rounds.saturating_add(1) {
            self.snapshot = Some((round, rows.clone()));
        }
        self.last_election = Some((round, rows));

        // (e) member traffic: each alive honest member offers one packet to
        // its head, paying transmit cost over the member-head distance; the
        // head pays reception per packet that actually arrives
        let mut offered = 0u64;
        let mut delivered = 0u64;
        let mut lost = 0u64;
        let mut arrived: BTreeMap<NodeId, u64> = heads.iter().map(|&h| (h, 0)).collect();

        for (&member, &head) in &assignment {
            offered += 1;
            let cost = em.tx_cost(bits, self.topo.distance_between(member, head));
            let m = self.topo.node_mut(member);
            if m.energy < cost {
                // battery dies mid-transmission: the packet never leaves
                spent += m.energy;
                m.energy = 0.0;
                lost += 1;
                continue;
            }
            m.energy -= cost;
            spent += cost;

            let rx = em.rx_cost(bits);
            let h = self.topo.node_mut(head);
            if h.energy < rx {
                // receiver browns out; the packet is gone
                spent += h.energy;
                h.energy = 0.0;
                lost += 1;
            } else {
                h.energy -= rx;
                spent += rx;
                *arrived.get_mut(&head).expect("head key present") += 1;
            }
        }

        // (f) each head forwards one aggregate to the sink, in admission
        // order. Honest heads deliver everything that arrived and reset
        // their drop streak. A dropper head keys its radio all the same —
        // malice buys it no energy advantage — but the aggregate carries
        // none of the member data.
        for &head in &heads {
            let count = arrived[&head];
            let d_sink = self.topo.node(head).pos.distance(self.topo.sink);
            let cost = em.tx_cost(bits, d_sink);
            let node = self.topo.node_mut(head);
            if node.is_dropper {
                lost += count;
                node.consecutive_drops += count as u32;
                let c = cost.min(node.energy);
                node.energy -= c;
                spent += c;
            } else if node.energy < cost {
                spent += node.energy;
                node.energy = 0.0;
                lost += count;
                // an empty battery is not malice: the streak is untouched
            } else {
                node.energy -= cost;
                spent += cost;
                delivered += count;
                node.consecutive_drops = 0;
            }
        }

        // (g) death sweep and milestones
        for n in &mut self.topo.nodes {
            if n.status != NodeStatus::Dead && n.energy <= 0.0 {
                n.status = NodeStatus::Dead;
                n.energy = 0.0;
            }
        }
        let alive = self.topo.alive_count();
        if self.fnd.is_none() && alive < self.initial_node_count {
            self.fnd = Some(round);
        }
        if self.hna.is_none() && alive <= self.initial_node_count / 2 {
            self.hna = Some(round);
        }
        if self.lnd.is_none() && alive == 0 {
            self.lnd = Some(round);
        }

        self.rounds_run = round;
        Ok(Some(RoundMetrics {
            round,
            packets_offered: offered,
            packets_delivered: delivered,
            packets_lost: lost,
            throughput: delivered as f64,
            total_residual_energy: self.topo.nodes.iter().map(|n| n.energy).sum(),
            energy_spent: spent,
            alive_count: alive,
        }))
    }

    /// Runs rounds until the network dies or `max_rounds` is reached.
    pub fn run(&mut self, mode: Mode) -> Result<SimRun, SimError> {
        let mut rounds = Vec::new();
        while self.rounds_run < self.cfg.max_rounds {
            match self.run_round(mode)? {
                Some(m) => rounds.push(m),
                None => break,
            }
        }
        Ok(SimRun {
            rounds,
            lifetime: self.lifetime(),
            initial_total_energy: self.initial_total_energy,
            initial_node_count: self.initial_node_count,
        })
    }

    fn build_rows(&self, scores: &[PotentialScore], election: &ElectionResult) -> Vec<ElectionRow> {
        let potential: BTreeMap<NodeId, f64> =
            scores.iter().map(|s| (s.node_id, s.potential)).collect();
        let head_rank: BTreeMap<NodeId, usize> =
            election.heads.iter().enumerate().map(|(i, &h)| (h, i)).collect();

        self.topo
            .nodes
            .iter()
            .map(|n| {
                let role = if n.status == NodeStatus::Dead {
                    Role::Dead
                } else if n.status == NodeStatus::Malicious {
                    Role::Malicious
                } else if let Some(&rank) = head_rank.get(&n.id) {
                    if rank < election.initial_count {
                        Role::InitialHead
                    } else {
                        Role::SpatialHead
                    }
                } else if election.rejected.contains(&n.id) {
                    Role::Rejected
                } else {
                    Role::Member
                };
                ElectionRow {
                    node_id: n.id,
                    potential: potential.get(&n.id).copied(),
                    role,
                    assigned_head: election.assignment.get(&n.id).copied(),
                }
            })
            .collect()
    }
}

/// Convenience wrapper: generate, run, return the series.
pub fn run_simulation(cfg: &SimConfig, mode: Mode, seed: u64) -> Result<SimRun, SimError> {
    let mut sim = Simulation::new(cfg, seed)?;
    sim.run(mode)
}

/// Censors an unreached milestone to one past the horizon so that "never
/// happened" compares later than any observed round.
fn censor(v: Option<u32>, horizon: u32) -> u32 {
    v.unwrap_or(horizon.saturating_add(1))
}

/// Side-by-side metrics of two modes on one seed's topology.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeedComparison {
    pub seed: u64,
    pub a: RunSummary,
    pub b: RunSummary,
    /// Mode B's HNA round (censored to the horizon when unreached); the
    /// residual-energy comparison is evaluated here.
    pub reference_round: u32,
    pub residual_a_at_reference: f64,
    pub residual_b_at_reference: f64,
}

/// Seed counts for which mode A beat mode B, per metric (strict inequality).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FavorCounts {
    pub seeds: usize,
    pub lower_cumulative_loss: usize,
    pub higher_mean_throughput: usize,
    pub higher_residual_at_reference: usize,
    pub later_fnd: usize,
    pub later_hna: usize,
}

/// Cross-seed means per mode. Lifetimes are censored means.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonMeans {
    pub cumulative_loss_a: f64,
    pub cumulative_loss_b: f64,
    pub mean_throughput_a: f64,
    pub mean_throughput_b: f64,
    pub residual_at_reference_a: f64,
    pub residual_at_reference_b: f64,
    pub fnd_a: f64,
    pub fnd_b: f64,
    pub hna_a: f64,
    pub hna_b: f64,
}

/// Mean per-round curves across seeds, for plotting. Series shorter than the
/// horizon carry their terminal residual/alive values forward and contribute
/// zero throughput and no new losses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub round: u32,
    pub cumulative_loss_a: f64,
    pub cumulative_loss_b: f64,
    pub throughput_a: f64,
    pub throughput_b: f64,
    pub residual_a: f64,
    pub residual_b: f64,
    pub alive_a: f64,
    pub alive_b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub mode_a: String,
    pub mode_b: String,
    pub max_rounds: u32,
    pub per_seed: Vec<SeedComparison>,
    pub means: ComparisonMeans,
    pub favor_a: FavorCounts,
    #[serde(skip)]
    pub curves: Vec<CurveRow>,
}

/// Runs both modes on identical topologies for every seed (in parallel) and
/// aggregates the comparison.
pub fn compare(
    cfg: &SimConfig,
    mode_a: Mode,
    mode_b: Mode,
    seeds: &[u64],
) -> Result<ComparisonReport, SimError> {
    if seeds.is_empty() {
        return Err(ConfigError::invalid("seeds", "comparison needs at least one seed").into());
    }
    cfg.validate()?;

    let runs: Vec<(u64, SimRun, SimRun)> = seeds
        .par_iter()
        .map(|&seed| {
            let topo = Topology::generate(cfg, seed)?;
            let run_a = Simulation::with_topology(cfg, topo.clone())?.run(mode_a)?;
            let run_b = Simulation::with_topology(cfg, topo)?.run(mode_b)?;
            Ok((seed, run_a, run_b))
        })
        .collect::<Result<_, SimError>>()?;

    let horizon = cfg.max_rounds;
    let mut per_seed = Vec::with_capacity(runs.len());
    for (seed, run_a, run_b) in &runs {
        let a = run_a.summary(horizon);
        let b = run_b.summary(horizon);
        let reference_round = censor(b.lifetime.hna, horizon).min(horizon.max(1));
        per_seed.push(SeedComparison {
            seed: *seed,
            a,
            b,
            reference_round,
            residual_a_at_reference: run_a.residual_at(reference_round),
            residual_b_at_reference: run_b.residual_at(reference_round),
        });
    }

    let n = per_seed.len() as f64;
    let mean = |f: &dyn Fn(&SeedComparison) -> f64| per_seed.iter().map(|s| f(s)).sum::<f64>() / n;
    let means = ComparisonMeans {
        cumulative_loss_a: mean(&|s| s.a.cumulative_loss as f64),
        cumulative_loss_b: mean(&|s| s.b.cumulative_loss as f64),
        mean_throughput_a: mean(&|s| s.a.mean_throughput),
        mean_throughput_b: mean(&|s| s.b.mean_throughput),
        residual_at_reference_a: mean(&|s| s.residual_a_at_reference),
        residual_at_reference_b: mean(&|s| s.residual_b_at_reference),
        fnd_a: mean(&|s| censor(s.a.lifetime.fnd, horizon) as f64),
        fnd_b: mean(&|s| censor(s.b.lifetime.fnd, horizon) as f64),
        hna_a: mean(&|s| censor(s.a.lifetime.hna, horizon) as f64),
        hna_b: mean(&|s| censor(s.b.lifetime.hna, horizon) as f64),
    };
    let favor_a = FavorCounts {
        seeds: per_seed.len(),
        lower_cumulative_loss: per_seed
            .iter()
            .filter(|s| s.a.cumulative_loss < s.b.cumulative_loss)
            .count(),
        higher_mean_throughput: per_seed
            .iter()
            .filter(|s| s.a.mean_throughput > s.b.mean_throughput)
            .count(),
        higher_residual_at_reference: per_seed
            .iter()
            .filter(|s| s.residual_a_at_reference > s.residual_b_at_reference)
            .count(),
        later_fnd: per_seed
            .iter()
            .filter(|s| censor(s.a.lifetime.fnd, horizon) > censor(s.b.lifetime.fnd, horizon))
            .count(),
        later_hna: per_seed
            .iter()
            .filter(|s| censor(s.a.lifetime.hna, horizon) > censor(s.b.lifetime.hna, horizon))
            .count(),
    };

    // mean curves over the longest observed series
    let curve_len = runs
        .iter()
        .map(|(_, a, b)| a.rounds.len().max(b.rounds.len()))
        .max()
        .unwrap_or(0);
    let mut curves = Vec::with_capacity(curve_len);
    for r in 1..=curve_len {
        let mut row = CurveRow {
            round: r as u32,
            cumulative_loss_a: 0.0,
            cumulative_loss_b: 0.0,
            throughput_a: 0.0,
            throughput_b: 0.0,
            residual_a: 0.0,
            residual_b: 0.0,
            alive_a: 0.0,
            alive_b: 0.0,
        };
        for (_, run_a, run_b) in &runs {
            let (la, ta, ea, va) = curve_point(run_a, r);
            let (lb, tb, eb, vb) = curve_point(run_b, r);
            row.cumulative_loss_a += la;
            row.throughput_a += ta;
            row.residual_a += ea;
            row.alive_a += va;
            row.cumulative_loss_b += lb;
            row.throughput_b += tb;
            row.residual_b += eb;
            row.alive_b += vb;
        }
        for v in [
            &mut row.cumulative_loss_a,
            &mut row.throughput_a,
            &mut row.residual_a,
            &mut row.alive_a,
            &mut row.cumulative_loss_b,
            &mut row.throughput_b,
            &mut row.residual_b,
            &mut row.alive_b,
        ] {
            *v /= n;
        }
        curves.push(row);
    }

    Ok(ComparisonReport {
        mode_a: mode_a.to_string(),
        mode_b: mode_b.to_string(),
        max_rounds: horizon,
        per_seed,
        means,
        favor_a,
        curves,
    })
}

/// (cumulative loss, throughput, residual, alive) of a run at round `r`,
/// carrying terminal values past the end of the series.
fn curve_point(run: &SimRun, r: usize) -> (f64, f64, f64, f64) {
    if run.rounds.is_empty() {
        return (0.0, 0.0, run.initial_total_energy, run.initial_node_count as f64);
    }
    let idx = r.min(run.rounds.len()) - 1;
    let cumulative_loss: u64 = run.rounds[..=idx].iter().map(|m| m.packets_lost).sum();
    let m = &run.rounds[idx];
    let throughput = if r <= run.rounds.len() { m.throughput } else { 0.0 };
    (cumulative_loss as f64, throughput, m.total_residual_energy, m.alive_count as f64)
}
