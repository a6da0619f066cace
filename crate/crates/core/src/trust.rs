//! Exponential trust factor and malicious-node detection.
//!
//! A node's trust factor decays exponentially with its streak of
//! consecutively dropped packets. Nodes at or below the threshold trust
//! factor are declared malicious and removed from all later elections.

use serde::{Deserialize, Serialize};

use crate::config::ConfigError;
use crate::topology::{NodeId, NodeStatus, Topology};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TrustConfig {
    /// Decay base of the trust factor, in (0, 1).
    pub x: f64,
    /// Threshold trust factor in (0, 100]. Nodes with trust at or below it
    /// are declared malicious.
    pub ttf: f64,
    /// Rounds of traffic before detection first runs.
    pub warmup_rounds: u32,
}

impl Default for TrustConfig {
    fn default() -> Self {
        // x = 0.9 / ttf = 50 puts the detection boundary at a streak of 7.
        Self { x: 0.9, ttf: 50.0, warmup_rounds: 5 }
    }
}

impl TrustConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.x > 0.0 && self.x < 1.0) {
            return Err(ConfigError::invalid("trust.x", "must lie strictly between 0 and 1"));
        }
        if !(self.ttf > 0.0 && self.ttf <= 100.0) {
            return Err(ConfigError::invalid("trust.ttf", "must lie in (0, 100]"));
        }
        Ok(())
    }
}

/// Trust factor in percent: `100 * x^n` for a streak of `n` consecutive
/// drops. A clean node (n = 0) scores exactly 100.
pub fn trust_factor(consecutive_drops: u32, x: f64) -> f64 {
    debug_assert!(x > 0.0 && x < 1.0, "decay base outside (0,1)");
    100.0 * x.powi(consecutive_drops as i32)
}

/// Marks every non-dead node whose trust factor has fallen to `ttf` or below
/// as `Malicious` and returns the full set of qualifying node ids, ascending.
/// Already-detected nodes stay malicious (their streaks never reset).
pub fn detect_malicious(topo: &mut Topology, tcfg: &TrustConfig) -> Vec<NodeId> {
    let mut detected = Vec::new();
    for node in &mut topo.nodes {
        if node.status == NodeStatus::Dead {
            continue;
        }
        if trust_factor(node.consecutive_drops, tcfg.x) <= tcfg.ttf {
            node.status = NodeStatus::Malicious;
            detected.push(node.id);
        }
    }
    detected
}
