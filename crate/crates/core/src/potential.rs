//! Per-node crisp fuzzy inputs and Potential scoring.
//!
//! For every alive, non-malicious node this module computes the three raw
//! inputs — residual energy, reachability (the scaled mean distance to
//! neighbors), and reception power (LQI over sink distance) — normalizes
//! them to [0,1] and runs them through the rule base to produce the node's
//! Potential.

use serde::Serialize;

use crate::config::SimConfig;
use crate::fuzzy::{FuzzyError, RuleBase};
use crate::topology::{NodeId, Topology};

/// Raw (un-normalized) fuzzy inputs for one node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeInputs {
    /// Joules.
    pub residual_energy: f64,
    /// Meters; the scaled mean distance to neighbors, or the isolation
    /// sentinel `2 * tx_range`.
    pub reachability: f64,
    /// LQI per meter of sink distance.
    pub reception_power: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialScore {
    pub node_id: NodeId,
    /// Crisp head-fitness in [0,1].
    pub potential: f64,
}

/// Reachability of node `i`: with `N = |neighbors| + 1`, the sum of
/// neighbor distances divided by `N`. Small values mean a well-connected
/// node. An isolated node gets the sentinel `2 * tx_range`, which normalizes
/// to the worst possible reachability.
pub fn reachability(topo: &Topology, i: NodeId) -> f64 {
    let neighbors = topo.neighbors(i);
    if neighbors.is_empty() {
        return 2.0 * topo.tx_range;
    }
    let n = (neighbors.len() + 1) as f64;
    neighbors.iter().map(|&j| topo.distance_between(i, j)).sum::<f64>() / n
}

/// Reception power of node `i`: LQI divided by the distance to the sink,
/// with the distance floored at 1 m so a node sitting on the sink does not
/// blow up the ratio.
pub fn reception_power(topo: &Topology, i: NodeId) -> f64 {
    let node = topo.node(i);
    node.lqi / node.pos.distance(topo.sink).max(1.0)
}

/// One node's full scoring record, kept for debugging dumps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreBreakdown {
    pub node_id: NodeId,
    pub raw: NodeInputs,
    /// Normalized (energy, reachability, reception power), each in [0,1].
    pub normalized: [f64; 3],
    pub potential: f64,
}

/// Raw and normalized inputs for every eligible node, in id order.
///
/// Normalization: energy by the configured initial energy; reachability via
/// the decreasing map `max(0, 1 - r/tx_range)` so that well-connected nodes
/// score high; reception power by its maximum over the eligible nodes this
/// round (zero when no node has signal).
fn normalized_inputs(topo: &Topology, cfg: &SimConfig) -> Vec<(NodeId, NodeInputs, [f64; 3])> {
    let eligible = topo.eligible_ids();
    let raw: Vec<(NodeId, NodeInputs)> = eligible
        .iter()
        .map(|&id| {
            (
                id,
                NodeInputs {
                    residual_energy: topo.node(id).energy,
                    reachability: reachability(topo, id),
                    reception_power: reception_power(topo, id),
                },
            )
        })
        .collect();
    let max_rp = raw.iter().map(|(_, r)| r.reception_power).fold(0.0, f64::max);

    raw.into_iter()
        .map(|(id, r)| {
            let e = r.residual_energy / cfg.energy.initial_energy;
            let reach = (1.0 - r.reachability / topo.tx_range).max(0.0);
            let rp = if max_rp > 0.0 { r.reception_power / max_rp } else { 0.0 };
            (id, r, [e, reach, rp])
        })
        .collect()
}

/// Potential for every alive, non-malicious node, in id order. Malicious and
/// dead nodes are excluded by construction.
pub fn score_all(
    topo: &Topology,
    rb: &RuleBase,
    cfg: &SimConfig,
) -> Result<Vec<PotentialScore>, FuzzyError> {
    normalized_inputs(topo, cfg)
        .into_iter()
        .map(|(id, _, norm)| {
            Ok(PotentialScore {
                node_id: id,
                potential: rb.potential(norm, cfg.fuzzy.resolution)?,
            })
        })
        .collect()
}

/// Like [`score_all`] but keeps the raw and normalized inputs per node.
pub fn score_breakdown(
    topo: &Topology,
    rb: &RuleBase,
    cfg: &SimConfig,
) -> Result<Vec<ScoreBreakdown>, FuzzyError> {
    normalized_inputs(topo, cfg)
        .into_iter()
        .map(|(id, raw, norm)| {
            Ok(ScoreBreakdown {
                node_id: id,
                raw,
                normalized: norm,
                potential: rb.potential(norm, cfg.fuzzy.resolution)?,
            })
        })
        .collect()
}

/// Debug CSV: one row per eligible node with raw inputs, normalized inputs
/// and the resulting Potential.
pub fn breakdown_csv(rows: &[ScoreBreakdown]) -> String {
    let mut out = String::from(
        "node_id,residual_energy,reachability,reception_power,\
         energy_norm,reachability_norm,reception_power_norm,potential\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.node_id,
            r.raw.residual_energy,
            r.raw.reachability,
            r.raw.reception_power,
            r.normalized[0],
            r.normalized[1],
            r.normalized[2],
            r.potential
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::FuzzyConfig;
    use crate::topology::{Node, NodeStatus, Position, Topology};
    use approx::assert_relative_eq;

    fn rulebase() -> RuleBase {
        RuleBase::from_config(&FuzzyConfig::default()).unwrap()
    }

    fn topo_at(positions: &[(f64, f64)], sink: Position, tx_range: f64) -> Topology {
        let nodes = positions
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| {
                let pos = Position::new(x, y);
                let lqi = crate::topology::synthetic_lqi(pos.distance(sink), tx_range);
                Node::new(i as NodeId, pos, 0.5, lqi)
            })
            .collect();
        Topology::from_nodes(nodes, 1000.0, 1000.0, sink, tx_range).unwrap()
    }

    #[test]
    fn reachability_direct_substitution() {
        // one neighbor at distance 10: N = 2, r = 10/2
        let topo = topo_at(&[(0.0, 0.0), (10.0, 0.0)], Position::new(0.0, 0.0), 100.0);
        assert_relative_eq!(reachability(&topo, 0), 5.0, max_relative = 1e-12);

        // two neighbors at 6 and 12: N = 3, r = 18/3
        let topo = topo_at(&[(0.0, 0.0), (6.0, 0.0), (12.0, 0.0)], Position::new(0.0, 0.0), 100.0);
        assert_relative_eq!(reachability(&topo, 0), 6.0, max_relative = 1e-12);
    }

    #[test]
    fn reachability_matches_brute_force() {
        let mut cfg = SimConfig::default();
        cfg.node_count = 15;
        cfg.malicious_count = 0;
        for seed in 0..8 {
            let topo = Topology::generate(&cfg, seed).unwrap();
            for i in 0..15 as NodeId {
                // independent recomputation straight from the distance matrix
                let mut sum = 0.0;
                let mut count = 0usize;
                for j in 0..15 as NodeId {
                    if i != j && topo.distance_between(i, j) <= topo.tx_range {
                        sum += topo.distance_between(i, j);
                        count += 1;
                    }
                }
                let expect =
                    if count == 0 { 2.0 * topo.tx_range } else { sum / (count + 1) as f64 };
                assert_relative_eq!(reachability(&topo, i), expect, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn isolated_node_gets_the_sentinel() {
        let topo = topo_at(&[(0.0, 0.0), (900.0, 900.0)], Position::new(0.0, 0.0), 100.0);
        assert_eq!(reachability(&topo, 0), 200.0);
        // which normalizes to the worst reachability
        let rows = normalized_inputs(&topo, &SimConfig::default());
        assert_eq!(rows[0].2[1], 0.0);
    }

    #[test]
    fn reception_power_examples() {
        let mut topo = topo_at(&[(100.0, 0.0), (500.0, 0.0)], Position::new(0.0, 0.0), 250.0);
        topo.node_mut(0).lqi = 200.0;
        assert_relative_eq!(reception_power(&topo, 0), 2.0, max_relative = 1e-12);

        topo.node_mut(0).lqi = 0.0;
        assert_eq!(reception_power(&topo, 0), 0.0);
    }

    #[test]
    fn reception_power_composes_with_the_lqi_model() {
        // default LQI model one full range from the sink: (255/2)/250
        let topo = topo_at(&[(250.0, 0.0), (50.0, 0.0)], Position::new(0.0, 0.0), 250.0);
        assert_relative_eq!(reception_power(&topo, 0), 0.51, max_relative = 1e-12);
    }

    #[test]
    fn node_on_the_sink_uses_the_distance_floor() {
        let topo = topo_at(&[(500.0, 500.0), (600.0, 500.0)], Position::new(500.0, 500.0), 250.0);
        // distance 0 floors to 1 m, LQI is at its maximum there
        assert_relative_eq!(reception_power(&topo, 0), 255.0, max_relative = 1e-12);
    }

    #[test]
    fn malicious_and_dead_nodes_are_never_scored() {
        let mut topo =
            topo_at(&[(0.0, 0.0), (50.0, 0.0), (100.0, 0.0), (150.0, 0.0)], Position::new(0.0, 0.0), 250.0);
        topo.node_mut(1).status = NodeStatus::Malicious;
        topo.node_mut(2).status = NodeStatus::Dead;
        topo.node_mut(2).energy = 0.0;
        let scores = score_all(&topo, &rulebase(), &SimConfig::default()).unwrap();
        let ids: Vec<NodeId> = scores.iter().map(|s| s.node_id).collect();
        assert_eq!(ids, vec![0, 3]);
    }

    #[test]
    fn all_malicious_means_no_scores() {
        let mut topo = topo_at(&[(0.0, 0.0), (50.0, 0.0)], Position::new(0.0, 0.0), 250.0);
        topo.node_mut(0).status = NodeStatus::Malicious;
        topo.node_mut(1).status = NodeStatus::Malicious;
        assert!(score_all(&topo, &rulebase(), &SimConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn symmetric_nodes_score_identically() {
        // mirrored around the sink: same sink distance, same neighbor set
        let topo = topo_at(&[(400.0, 500.0), (600.0, 500.0)], Position::new(500.0, 500.0), 250.0);
        let scores = score_all(&topo, &rulebase(), &SimConfig::default()).unwrap();
        assert_relative_eq!(scores[0].potential, scores[1].potential, max_relative = 1e-12);
    }

    #[test]
    fn potentials_stay_in_unit_interval() {
        let mut cfg = SimConfig::default();
        cfg.node_count = 60;
        cfg.malicious_count = 0;
        let topo = Topology::generate(&cfg, 21).unwrap();
        let scores = score_all(&topo, &rulebase(), &cfg).unwrap();
        assert_eq!(scores.len(), 60);
        for s in &scores {
            assert!((0.0..=1.0).contains(&s.potential), "node {}: {}", s.node_id, s.potential);
        }
    }

    #[test]
    fn five_node_scores_match_dense_grid_oracle() {
        let cfg = SimConfig::default();
        let sink = Position::new(500.0, 500.0);
        let topo = topo_at(
            &[(500.0, 480.0), (430.0, 520.0), (610.0, 455.0), (220.0, 700.0), (760.0, 240.0)],
            sink,
            cfg.tx_range,
        );
        let rb = rulebase();
        let scores = score_all(&topo, &rb, &cfg).unwrap();

        // independent end-to-end recomputation: raw inputs from the distance
        // matrix, normalization by hand, dense-grid defuzzification
        let mut raw = Vec::new();
        for i in 0..5u32 {
            let me = topo.node(i);
            let mut sum = 0.0;
            let mut count = 0usize;
            for j in 0..5u32 {
                if i != j && topo.distance_between(i, j) <= cfg.tx_range {
                    sum += topo.distance_between(i, j);
                    count += 1;
                }
            }
            let r = if count == 0 { 2.0 * cfg.tx_range } else { sum / (count + 1) as f64 };
            let rp = me.lqi / me.pos.distance(sink).max(1.0);
            raw.push((me.energy, r, rp));
        }
        let max_rp = raw.iter().map(|t| t.2).fold(0.0, f64::max);
        for (i, &(e, r, rp)) in raw.iter().enumerate() {
            let norm = [
                e / cfg.energy.initial_energy,
                (1.0 - r / cfg.tx_range).max(0.0),
                rp / max_rp,
            ];
            let set = rb.infer(norm);
            let mut num = 0.0;
            let mut den = 0.0;
            let grid = 200_001;
            for k in 0..grid {
                let v = k as f64 / (grid - 1) as f64;
                let mu = set.membership(v);
                num += v * mu;
                den += mu;
            }
            assert!((scores[i].potential - num / den).abs() < 1e-3, "node {i}");
        }
    }

    #[test]
    fn relabeling_nodes_leaves_position_potentials_unchanged() {
        let cfg = SimConfig::default();
        let sink = Position::new(500.0, 500.0);
        let positions =
            [(120.0, 80.0), (510.0, 505.0), (700.0, 430.0), (350.0, 640.0), (810.0, 790.0), (460.0, 310.0)];
        let topo = topo_at(&positions, sink, cfg.tx_range);
        let mut reversed: Vec<(f64, f64)> = positions.to_vec();
        reversed.reverse();
        let topo_rev = topo_at(&reversed, sink, cfg.tx_range);

        let rb = rulebase();
        let fwd = score_all(&topo, &rb, &cfg).unwrap();
        let rev = score_all(&topo_rev, &rb, &cfg).unwrap();
        for (i, s) in fwd.iter().enumerate() {
            let mirror = &rev[positions.len() - 1 - i];
            assert_relative_eq!(s.potential, mirror.potential, max_relative = 1e-12);
        }
    }

    #[test]
    fn breakdown_csv_has_one_row_per_eligible_node() {
        let cfg = SimConfig::default();
        let topo = topo_at(&[(100.0, 100.0), (200.0, 200.0)], Position::new(500.0, 500.0), 250.0);
        let rows = score_breakdown(&topo, &rulebase(), &cfg).unwrap();
        let csv = breakdown_csv(&rows);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("node_id,"));
    }
}
