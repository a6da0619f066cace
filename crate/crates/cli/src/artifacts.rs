//! CSV/JSON artifact builders. All numeric formatting goes through Rust's
//! shortest-round-trip float display, so identical runs serialize to
//! byte-identical files.

use std::fs;
use std::path::Path;

use dchfc::{ComparisonReport, RoundMetrics};

use crate::error::CliError;

/// `rounds.csv`: one row per simulated round.
pub fn rounds_csv(rounds: &[RoundMetrics]) -> String {
    let mut out = String::from(
        "round,packets_offered,packets_delivered,packets_lost,throughput,\
         total_residual_energy,energy_spent,alive_count\n",
    );
    for m in rounds {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            m.round,
            m.packets_offered,
            m.packets_delivered,
            m.packets_lost,
            m.throughput,
            m.total_residual_energy,
            m.energy_spent,
            m.alive_count
        ));
    }
    out
}

fn opt(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// `compare.csv`: one row per seed, mode A and B side by side.
pub fn compare_csv(report: &ComparisonReport) -> String {
    let a = &report.mode_a;
    let b = &report.mode_b;
    let mut out = format!(
        "seed,loss_{a},loss_{b},delivered_{a},delivered_{b},throughput_{a},throughput_{b},\
         fnd_{a},fnd_{b},hna_{a},hna_{b},lnd_{a},lnd_{b},\
         reference_round,residual_{a}_at_reference,residual_{b}_at_reference\n"
    );
    for s in &report.per_seed {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            s.seed,
            s.a.cumulative_loss,
            s.b.cumulative_loss,
            s.a.total_delivered,
            s.b.total_delivered,
            s.a.mean_throughput,
            s.b.mean_throughput,
            opt(s.a.lifetime.fnd),
            opt(s.b.lifetime.fnd),
            opt(s.a.lifetime.hna),
            opt(s.b.lifetime.hna),
            opt(s.a.lifetime.lnd),
            opt(s.b.lifetime.lnd),
            s.reference_round,
            s.residual_a_at_reference,
            s.residual_b_at_reference
        ));
    }
    out
}

/// `curves.csv`: per-round means across seeds, both modes.
pub fn curves_csv(report: &ComparisonReport) -> String {
    let a = &report.mode_a;
    let b = &report.mode_b;
    let mut out = format!(
        "round,cumulative_loss_{a},cumulative_loss_{b},throughput_{a},throughput_{b},\
         residual_{a},residual_{b},alive_{a},alive_{b}\n"
    );
    for r in &report.curves {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.round,
            r.cumulative_loss_a,
            r.cumulative_loss_b,
            r.throughput_a,
            r.throughput_b,
            r.residual_a,
            r.residual_b,
            r.alive_a,
            r.alive_b
        ));
    }
    out
}

/// `sweep.csv` accumulates one row per swept value.
pub fn sweep_header(key: &str, report: &ComparisonReport) -> String {
    let a = &report.mode_a;
    let b = &report.mode_b;
    format!(
        "{key},seeds,mean_loss_{a},mean_loss_{b},mean_throughput_{a},mean_throughput_{b},\
         mean_residual_at_reference_{a},mean_residual_at_reference_{b},\
         mean_fnd_{a},mean_fnd_{b},mean_hna_{a},mean_hna_{b}\n"
    )
}

pub fn sweep_row(value: &str, report: &ComparisonReport) -> String {
    let m = &report.means;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}\n",
        value,
        report.per_seed.len(),
        m.cumulative_loss_a,
        m.cumulative_loss_b,
        m.mean_throughput_a,
        m.mean_throughput_b,
        m.residual_at_reference_a,
        m.residual_at_reference_b,
        m.fnd_a,
        m.fnd_b,
        m.hna_a,
        m.hna_b
    )
}

/// Writes a text artifact, creating the parent directory when needed.
pub fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
