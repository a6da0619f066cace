//! Command-line surface. Any `--key=value` flag whose key names a config
//! entry (dotted sections allowed) is lifted out before clap parsing and
//! applied as a config override, so every documented config key doubles as
//! a flag: `dchfc run --trust.ttf=40 --max_rounds=200`.

use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use dchfc::Mode;

#[derive(Debug, Parser)]
#[command(name = "dchfc", version, about = "WSN cluster-head election simulator: DCHFC vs a CHUFL baseline")]
pub struct Cli {
    /// TOML config file; defaults apply when omitted
    #[arg(long, global = true, env = "DCHFC_CONFIG", value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Config override, `key=value` (repeatable); `--key=value` works too
    #[arg(long = "set", global = true, value_name = "KEY=VALUE", action = ArgAction::Append)]
    pub set: Vec<String>,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Simulate one run and write rounds.csv, lifetime.json, election.csv
    /// and a topology map
    Run {
        /// Artifact directory (created if missing)
        #[arg(long, default_value = "out", value_name = "DIR")]
        out_dir: PathBuf,
        /// Election pipeline: dchfc or chufl
        #[arg(long, default_value = "dchfc", value_parser = parse_mode)]
        mode: Mode,
        /// Skip the topology.svg artifact
        #[arg(long)]
        no_svg: bool,
    },
    /// Run DCHFC and the CHUFL baseline on identical topologies across
    /// seeds; write per-seed and mean comparisons plus charts
    Compare {
        #[arg(long, default_value = "out", value_name = "DIR")]
        out_dir: PathBuf,
        /// Seed count; consecutive from `seed` unless `seeds` is set in config
        #[arg(long, default_value_t = 20)]
        seeds: usize,
    },
    /// Repeat a comparison for each value of one config key
    Sweep {
        #[arg(long, default_value = "out", value_name = "DIR")]
        out_dir: PathBuf,
        /// Config key to vary, e.g. election.d_threshold
        #[arg(long)]
        key: String,
        /// Comma-separated values for the key
        #[arg(long)]
        values: String,
        #[arg(long, default_value_t = 5)]
        seeds: usize,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// Long flags owned by the CLI itself; everything else of the form
/// `--key=value` is a config override.
const RESERVED: &[&str] = &[
    "config", "set", "out-dir", "mode", "no-svg", "seeds", "key", "values", "help", "version",
];

/// Splits raw argv into (args for clap, config overrides).
pub fn split_overrides(args: Vec<String>) -> (Vec<String>, Vec<String>) {
    let mut keep = Vec::with_capacity(args.len());
    let mut overrides = Vec::new();
    for a in args {
        if let Some(rest) = a.strip_prefix("--") {
            if let Some((name, _)) = rest.split_once('=') {
                let config_key = !name.is_empty()
                    && !RESERVED.contains(&name)
                    && name
                        .chars()
                        .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' || c == '.');
                if config_key {
                    overrides.push(rest.to_string());
                    continue;
                }
            }
        }
        keep.push(a);
    }
    (keep, overrides)
}
