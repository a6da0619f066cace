//! Cluster-head selection and cluster assignment.
//!
//! DCHFC elects an unconditional slice of top-Potential nodes, then keeps
//! admitting candidates in descending Potential order as long as they stay
//! more than `d_threshold` away from every head admitted so far. The CHUFL
//! baseline simply takes a fixed percentage of top-Potential nodes with no
//! spatial filter. Every remaining alive node joins its nearest head.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::ConfigError;
use crate::potential::PotentialScore;
use crate::topology::{NodeId, Topology};

/// How fractional head counts become integers. The percentage targets in
/// common configurations rarely divide evenly, so the rule is explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    Floor,
    Round,
    #[default]
    Ceil,
}

impl Rounding {
    /// Applies the rounding rule. Values within 1e-9 of an integer snap to
    /// it first, so `0.1 * 50` counts as exactly 5 heads under any rule.
    pub fn apply(&self, v: f64) -> usize {
        let snapped = if (v - v.round()).abs() < 1e-9 { v.round() } else { v };
        let out = match self {
            Rounding::Floor => snapped.floor(),
            Rounding::Round => snapped.round(),
            Rounding::Ceil => snapped.ceil(),
        };
        out.max(0.0) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ElectionConfig {
    /// Fraction of nodes admitted as heads unconditionally each round.
    pub p_initial: f64,
    /// Minimum spacing (meters) required of every later head admission.
    pub d_threshold: f64,
    /// Head fraction used by the CHUFL baseline.
    pub chufl_head_pct: f64,
    pub rounding: Rounding,
    /// When set, the unconditional slice is dropped and every admission,
    /// including the first `p_initial` worth, must pass the spacing test.
    pub strict_initial_spacing: bool,
}

impl Default for ElectionConfig {
    fn default() -> Self {
        Self {
            p_initial: 0.08,
            d_threshold: 200.0,
            chufl_head_pct: 0.14,
            rounding: Rounding::Ceil,
            strict_initial_spacing: false,
        }
    }
}

impl ElectionConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.p_initial > 0.0 && self.p_initial < 1.0) {
            return Err(ConfigError::invalid(
                "election.p_initial",
                "must lie strictly between 0 and 1",
            ));
        }
        if !(self.d_threshold > 0.0) {
            return Err(ConfigError::invalid("election.d_threshold", "must be positive"));
        }
        if !(self.chufl_head_pct > 0.0 && self.chufl_head_pct <= 1.0) {
            return Err(ConfigError::invalid("election.chufl_head_pct", "must lie in (0, 1]"));
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElectionError {
    #[error("no eligible nodes to elect from")]
    NoEligibleNodes,
}

/// Outcome of one election round.
#[derive(Debug, Clone, PartialEq)]
pub struct ElectionResult {
    /// Heads in admission order; the first `initial_count` were admitted
    /// unconditionally, the rest passed the spacing test.
    pub heads: Vec<NodeId>,
    pub initial_count: usize,
    /// Every alive non-head node mapped to its head — including rejected
    /// candidates, which join a cluster like any other member.
    pub assignment: BTreeMap<NodeId, NodeId>,
    /// Candidates that failed the spacing test this round.
    pub rejected: Vec<NodeId>,
    /// Members farther than `tx_range` from their head. They still belong
    /// to the cluster; the distance simply costs them more to transmit.
    pub out_of_range: BTreeSet<NodeId>,
}

/// Candidate order: descending potential, ties broken by ascending node id.
fn ranked(scores: &[PotentialScore]) -> Vec<NodeId> {
    let mut order: Vec<&PotentialScore> = scores.iter().collect();
    order.sort_by(|x, y| {
        y.potential
            .partial_cmp(&x.potential)
            .expect("potentials are never NaN")
            .then(x.node_id.cmp(&y.node_id))
    });
    order.into_iter().map(|s| s.node_id).collect()
}

/// DCHFC head selection. Returns `(heads in admission order, size of the
/// unconditional slice, rejected candidates)`.
///
/// The unconditional slice is the top `p_initial * node_count` (rounded per
/// config) of the ranking; afterwards each candidate is admitted iff its
/// minimum distance to all admitted heads strictly exceeds `d_threshold`.
/// With `strict_initial_spacing` the unconditional slice is empty and the
/// spacing test applies from the very first admission (trivially true for
/// the top candidate).
pub fn select_heads_dchfc(
    scores: &[PotentialScore],
    topo: &Topology,
    ecfg: &ElectionConfig,
) -> Result<(Vec<NodeId>, usize, Vec<NodeId>), ElectionError> {
    if scores.is_empty() {
        return Err(ElectionError::NoEligibleNodes);
    }
    let initial_target = if ecfg.strict_initial_spacing {
        0
    } else {
        ecfg.rounding.apply(ecfg.p_initial * topo.nodes.len() as f64)
    };

    let mut heads: Vec<NodeId> = Vec::new();
    let mut rejected: Vec<NodeId> = Vec::new();
    for id in ranked(scores) {
        if heads.len() < initial_target {
            heads.push(id);
            continue;
        }
        let d_min = heads
            .iter()
            .map(|&h| topo.distance_between(h, id))
            .fold(f64::INFINITY, f64::min);
        if d_min > ecfg.d_threshold {
            heads.push(id);
        } else {
            rejected.push(id);
        }
    }
    Ok((heads, initial_target.min(scores.len()), rejected))
}

/// CHUFL baseline: the top `chufl_head_pct * node_count` (rounded per
/// config, at least one) nodes by potential. No spacing test, no rejects.
pub fn select_heads_chufl(
    scores: &[PotentialScore],
    node_count: usize,
    ecfg: &ElectionConfig,
) -> Result<Vec<NodeId>, ElectionError> {
    if scores.is_empty() {
        return Err(ElectionError::NoEligibleNodes);
    }
    let k = ecfg
        .rounding
        .apply(ecfg.chufl_head_pct * node_count as f64)
        .clamp(1, scores.len());
    let mut order = ranked(scores);
    order.truncate(k);
    Ok(order)
}

/// Assigns every alive non-head node to its nearest head (the modeled
/// strongest signal), breaking exact distance ties by the smaller head id.
/// Returns the assignment and the set of members beyond `tx_range` of their
/// head.
pub fn assign_clusters(
    topo: &Topology,
    heads: &[NodeId],
) -> (BTreeMap<NodeId, NodeId>, BTreeSet<NodeId>) {
    assert!(!heads.is_empty(), "assign_clusters needs at least one head");
    let head_set: BTreeSet<NodeId> = heads.iter().copied().collect();
    let mut assignment = BTreeMap::new();
    let mut out_of_range = BTreeSet::new();

    for node in &topo.nodes {
        if !node.is_alive() || head_set.contains(&node.id) {
            continue;
        }
        let mut best: Option<(f64, NodeId)> = None;
        for &h in &head_set {
            let d = topo.distance_between(node.id, h);
            let better = match best {
                None => true,
                Some((bd, bh)) => d < bd || (d == bd && h < bh),
            };
            if better {
                best = Some((d, h));
            }
        }
        let (d, h) = best.expect("head set is non-empty");
        assignment.insert(node.id, h);
        if d > topo.tx_range {
            out_of_range.insert(node.id);
        }
    }
    (assignment, out_of_range)
}
