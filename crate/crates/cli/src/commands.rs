//! Subcommand implementations: load the config, run the simulations, write
//! the artifacts, print a one-screen summary.

use std::path::Path;

use dchfc::simulation::CurveRow;
use dchfc::{compare, election_csv, ComparisonReport, ConfigError, Mode, SimConfig, Simulation};

use crate::args::{Cli, Cmd};
use crate::artifacts;
use crate::error::CliError;
use crate::plot::{self, Series};

const COLOR_A: &str = "#1f77b4";
const COLOR_B: &str = "#ff7f0e";

pub fn dispatch(cli: Cli, lifted_overrides: &[String]) -> Result<(), CliError> {
    let mut overrides = cli.set.clone();
    overrides.extend_from_slice(lifted_overrides);
    let path = cli.config.as_deref();
    let cfg = SimConfig::load(path, &overrides)?;
    cfg.validate()?;
    match cli.cmd {
        Cmd::Run { out_dir, mode, no_svg } => cmd_run(&cfg, &out_dir, mode, !no_svg),
        Cmd::Compare { out_dir, seeds } => cmd_compare(&cfg, &out_dir, seeds),
        Cmd::Sweep { out_dir, key, values, seeds } => {
            cmd_sweep(path, &overrides, &out_dir, &key, &values, seeds)
        }
    }
}

fn show(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".to_string())
}

pub fn cmd_run(cfg: &SimConfig, out_dir: &Path, mode: Mode, svg: bool) -> Result<(), CliError> {
    let mut sim = Simulation::new(cfg, cfg.seed)?;
    let run = sim.run(mode)?;

    artifacts::write(&out_dir.join("rounds.csv"), &artifacts::rounds_csv(&run.rounds))?;
    artifacts::write(&out_dir.join("lifetime.json"), &artifacts::json(&run.lifetime)?)?;
    let election = match sim.election_rows() {
        Some((round, rows)) => election_csv(round, rows),
        None => "round,node_id,potential,role,assigned_head\n".to_string(),
    };
    artifacts::write(&out_dir.join("election.csv"), &election)?;
    artifacts::write(&out_dir.join("resolved_config.json"), &artifacts::json(cfg)?)?;
    if svg {
        let map = plot::topology_svg(sim.topology(), sim.election_rows());
        artifacts::write(&out_dir.join("topology.svg"), &map)?;
    }

    let delivered: u64 = run.rounds.iter().map(|m| m.packets_delivered).sum();
    let lost: u64 = run.rounds.iter().map(|m| m.packets_lost).sum();
    let lt = run.lifetime;
    println!(
        "{mode}: {} rounds, {delivered} delivered / {lost} lost, fnd {} hna {} lnd {} -> {}",
        run.rounds.len(),
        show(lt.fnd),
        show(lt.hna),
        show(lt.lnd),
        out_dir.display()
    );
    Ok(())
}

fn curve(report: &ComparisonReport, f: impl Fn(&CurveRow) -> f64) -> Vec<(f64, f64)> {
    report.curves.iter().map(|r| (r.round as f64, f(r))).collect()
}

pub fn cmd_compare(cfg: &SimConfig, out_dir: &Path, seed_count: usize) -> Result<(), CliError> {
    let seeds = cfg.seed_list(seed_count);
    let report = compare(cfg, Mode::Dchfc, Mode::ChuflBaseline, &seeds)?;

    artifacts::write(&out_dir.join("compare.csv"), &artifacts::compare_csv(&report))?;
    artifacts::write(&out_dir.join("curves.csv"), &artifacts::curves_csv(&report))?;
    artifacts::write(&out_dir.join("summary.json"), &artifacts::json(&report)?)?;
    artifacts::write(&out_dir.join("resolved_config.json"), &artifacts::json(cfg)?)?;

    let (a, b) = (report.mode_a.clone(), report.mode_b.clone());
    let pair = |fa: fn(&CurveRow) -> f64, fb: fn(&CurveRow) -> f64| {
        vec![
            Series { label: &a, color: COLOR_A, points: curve(&report, fa) },
            Series { label: &b, color: COLOR_B, points: curve(&report, fb) },
        ]
    };
    artifacts::write(
        &out_dir.join("packet_loss.svg"),
        &plot::line_chart(
            "cumulative packet loss",
            "round",
            "packets lost",
            &pair(|r| r.cumulative_loss_a, |r| r.cumulative_loss_b),
        ),
    )?;
    artifacts::write(
        &out_dir.join("throughput.svg"),
        &plot::line_chart(
            "throughput",
            "round",
            "packets delivered per round",
            &pair(|r| r.throughput_a, |r| r.throughput_b),
        ),
    )?;
    artifacts::write(
        &out_dir.join("residual_energy.svg"),
        &plot::line_chart(
            "total residual energy",
            "round",
            "joules",
            &pair(|r| r.residual_a, |r| r.residual_b),
        ),
    )?;
    // lifetime milestones, censored to one past the horizon when unreached
    let horizon = report.max_rounds;
    let censored_mean = |pick: fn(&dchfc::RunSummary) -> Option<u32>, side_a: bool| -> f64 {
        report
            .per_seed
            .iter()
            .map(|s| pick(if side_a { &s.a } else { &s.b }).unwrap_or(horizon + 1) as f64)
            .sum::<f64>()
            / report.per_seed.len() as f64
    };
    let groups = [
        ("FND", report.means.fnd_a, report.means.fnd_b),
        ("HNA", report.means.hna_a, report.means.hna_b),
        (
            "LND",
            censored_mean(|r| r.lifetime.lnd, true),
            censored_mean(|r| r.lifetime.lnd, false),
        ),
    ];
    artifacts::write(
        &out_dir.join("lifetime.svg"),
        &plot::lifetime_chart("network lifetime milestones (mean rounds)", &a, &b, &groups),
    )?;

    let m = &report.means;
    let f = &report.favor_a;
    let n = f.seeds;
    println!("compared {a} vs {b} over {n} seeds ({} rounds max):", report.max_rounds);
    println!(
        "  cumulative loss   {:>10.1} vs {:>10.1}   ({}/{n} seeds favor {a})",
        m.cumulative_loss_a, m.cumulative_loss_b, f.lower_cumulative_loss
    );
    println!(
        "  mean throughput   {:>10.3} vs {:>10.3}   ({}/{n})",
        m.mean_throughput_a, m.mean_throughput_b, f.higher_mean_throughput
    );
    println!(
        "  residual @ ref    {:>10.3} vs {:>10.3}   ({}/{n})",
        m.residual_at_reference_a, m.residual_at_reference_b, f.higher_residual_at_reference
    );
    println!("  mean FND          {:>10.1} vs {:>10.1}   ({}/{n})", m.fnd_a, m.fnd_b, f.later_fnd);
    println!("  mean HNA          {:>10.1} vs {:>10.1}   ({}/{n})", m.hna_a, m.hna_b, f.later_hna);
    println!("artifacts in {}", out_dir.display());
    Ok(())
}

pub fn cmd_sweep(
    config_path: Option<&Path>,
    base_overrides: &[String],
    out_dir: &Path,
    key: &str,
    values: &str,
    seed_count: usize,
) -> Result<(), CliError> {
    let vals: Vec<&str> = values.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
    if vals.is_empty() {
        return Err(ConfigError::invalid("values", "sweep needs at least one value").into());
    }
    let mut csv = String::new();
    for v in &vals {
        let mut overrides = base_overrides.to_vec();
        overrides.push(format!("{key}={v}"));
        let cfg = SimConfig::load(config_path, &overrides)?;
        cfg.validate()?;
        let seeds = cfg.seed_list(seed_count);
        let report = compare(&cfg, Mode::Dchfc, Mode::ChuflBaseline, &seeds)?;
        if csv.is_empty() {
            csv.push_str(&artifacts::sweep_header(key, &report));
        }
        csv.push_str(&artifacts::sweep_row(v, &report));
        let m = &report.means;
        println!(
            "{key}={v}: loss {:.1} vs {:.1}, throughput {:.2} vs {:.2}, hna {:.1} vs {:.1}",
            m.cumulative_loss_a,
            m.cumulative_loss_b,
            m.mean_throughput_a,
            m.mean_throughput_b,
            m.hna_a,
            m.hna_b
        );
    }
    artifacts::write(&out_dir.join("sweep.csv"), &csv)?;
    println!("artifacts in {}", out_dir.display());
    Ok(())
}
