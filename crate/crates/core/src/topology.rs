//! Spatial network model: node placement, distances, neighborhoods and the
//! synthetic link-quality indicator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::{ConfigError, SimConfig};

/// Node identifiers are dense indices into `Topology::nodes`.
pub type NodeId = u32;

/// LQI ceiling, matching the 802.15.4 one-byte range.
pub const LQI_MAX: f64 = 255.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

impl Position {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Euclidean distance in meters.
    pub fn distance(&self, other: Position) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeStatus {
    Alive,
    Dead,
    /// Detected as a packet-dropper and removed from the protocol.
    Malicious,
    /// Serving as a cluster head for the current round.
    ClusterHead,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: NodeId,
    pub pos: Position,
    /// Residual energy in joules. Never increases over a run.
    pub energy: f64,
    pub lqi: f64,
    /// Current streak of consecutively dropped packets. Resets to zero on a
    /// successful forward.
    pub consecutive_drops: u32,
    pub status: NodeStatus,
    /// Ground-truth attacker flag. A dropper silently discards every packet
    /// it should forward; `status` only becomes `Malicious` once the trust
    /// layer detects it.
    pub is_dropper: bool,
}

impl Node {
    pub fn new(id: NodeId, pos: Position, energy: f64, lqi: f64) -> Self {
        Self {
            id,
            pos,
            energy,
            lqi,
            consecutive_drops: 0,
            status: NodeStatus::Alive,
            is_dropper: false,
        }
    }

    /// Alive for protocol purposes. Cluster heads are alive nodes; detected
    /// malicious nodes and dead nodes are not.
    pub fn is_alive(&self) -> bool {
        matches!(self.status, NodeStatus::Alive | NodeStatus::ClusterHead)
    }
}

/// Immutable after generation within a run; the simulation loop is the only
/// mutator (energy, drop counters, status).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Topology {
    pub nodes: Vec<Node>,
    pub field_width: f64,
    pub field_height: f64,
    pub sink: Position,
    pub tx_range: f64,
    pub rng_seed: u64,
}

/// Synthetic LQI model: full quality at the sink, decaying with the square
/// of the distance, scaled so that a node one transmission range away reads
/// exactly half of `LQI_MAX`.
pub fn synthetic_lqi(dist_to_sink: f64, tx_range: f64) -> f64 {
    let r2 = tx_range * tx_range;
    LQI_MAX * r2 / (r2 + dist_to_sink * dist_to_sink)
}

impl Topology {
    /// Places `cfg.node_count` nodes uniformly at random in the field and
    /// flags `cfg.malicious_count` of them as droppers. Identical
    /// `(cfg, seed)` inputs produce a bit-identical topology.
    pub fn generate(cfg: &SimConfig, seed: u64) -> Result<Self, ConfigError> {
        if cfg.node_count < 2 {
            return Err(ConfigError::invalid("node_count", "must be at least 2"));
        }
        if cfg.malicious_count >= cfg.node_count {
            return Err(ConfigError::invalid(
                "malicious_count",
                "must be smaller than node_count",
            ));
        }
        if cfg.field_width <= 0.0 || cfg.field_height <= 0.0 {
            return Err(ConfigError::invalid("field_width/field_height", "must be positive"));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut nodes = Vec::with_capacity(cfg.node_count);
        for id in 0..cfg.node_count {
            let pos = Position::new(
                rng.gen_range(0.0..cfg.field_width),
                rng.gen_range(0.0..cfg.field_height),
            );
            let lqi = synthetic_lqi(pos.distance(cfg.sink), cfg.tx_range);
            nodes.push(Node::new(id as NodeId, pos, cfg.energy.initial_energy, lqi));
        }
        for idx in rand::seq::index::sample(&mut rng, cfg.node_count, cfg.malicious_count) {
            nodes[idx].is_dropper = true;
        }

        Ok(Self {
            nodes,
            field_width: cfg.field_width,
            field_height: cfg.field_height,
            sink: cfg.sink,
            tx_range: cfg.tx_range,
            rng_seed: seed,
        })
    }

    /// Builds a topology from explicit nodes, checking id density and field
    /// bounds. Intended for tests and CSV import.
    pub fn from_nodes(
        nodes: Vec<Node>,
        field_width: f64,
        field_height: f64,
        sink: Position,
        tx_range: f64,
    ) -> Result<Self, ConfigError> {
        for (i, node) in nodes.iter().enumerate() {
            if node.id != i as NodeId {
                return Err(ConfigError::invalid(
                    "nodes",
                    format!("node ids must be dense 0..n-1; found id {} at index {i}", node.id),
                ));
            }
            if node.pos.x < 0.0 || node.pos.x > field_width || node.pos.y < 0.0 || node.pos.y > field_height {
                return Err(ConfigError::invalid(
                    "nodes",
                    format!("node {} lies outside the field", node.id),
                ));
            }
        }
        Ok(Self { nodes, field_width, field_height, sink, tx_range, rng_seed: 0 })
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id as usize]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id as usize]
    }

    pub fn distance_between(&self, a: NodeId, b: NodeId) -> f64 {
        self.node(a).pos.distance(self.node(b).pos)
    }

    /// All non-dead nodes within `tx_range` of `id`, excluding `id` itself.
    pub fn neighbors(&self, id: NodeId) -> Vec<NodeId> {
        let me = self.node(id);
        self.nodes
            .iter()
            .filter(|n| {
                n.id != id
                    && n.status != NodeStatus::Dead
                    && n.pos.distance(me.pos) <= self.tx_range
            })
            .map(|n| n.id)
            .collect()
    }

    /// Nodes that still hold charge, i.e. everything except `Dead`. Detected
    /// malicious nodes are counted: they are removed from the protocol but
    /// their batteries have not run out.
    pub fn alive_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.status != NodeStatus::Dead).count()
    }

    /// Nodes eligible for scoring and election: alive and not detected.
    pub fn eligible_ids(&self) -> Vec<NodeId> {
        self.nodes.iter().filter(|n| n.is_alive()).map(|n| n.id).collect()
    }

    /// One row per node: `id,x,y,energy,lqi,is_dropper`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,x,y,energy,lqi,is_dropper\n");
        for n in &self.nodes {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                n.id,
                n.pos.x,
                n.pos.y,
                n.energy,
                n.lqi,
                n.is_dropper as u8
            ));
        }
        out
    }

    /// Parses the CSV produced by [`Topology::to_csv`]. Field geometry is not
    /// part of the row format and must be supplied by the caller.
    pub fn from_csv(
        text: &str,
        field_width: f64,
        field_height: f64,
        sink: Position,
        tx_range: f64,
    ) -> Result<Self, ConfigError> {
        let mut rows: Vec<Node> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with("id,") {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 6 {
                return Err(ConfigError::csv(lineno + 1, "expected 6 fields"));
            }
            let parse_f = |s: &str, what: &str| -> Result<f64, ConfigError> {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| ConfigError::csv(lineno + 1, format!("bad {what} `{s}`")))
            };
            let id: NodeId = fields[0]
                .trim()
                .parse()
                .map_err(|_| ConfigError::csv(lineno + 1, format!("bad id `{}`", fields[0])))?;
            let mut node = Node::new(
                id,
                Position::new(parse_f(fields[1], "x")?, parse_f(fields[2], "y")?),
                parse_f(fields[3], "energy")?,
                parse_f(fields[4], "lqi")?,
            );
            node.is_dropper = match fields[5].trim() {
                "0" | "false" => false,
                "1" | "true" => true,
                other => return Err(ConfigError::csv(lineno + 1, format!("bad is_dropper `{other}`"))),
            };
            rows.push(node);
        }
        rows.sort_by_key(|n| n.id);
        Self::from_nodes(rows, field_width, field_height, sink, tx_range)
    }
}
