use std::path::Path;
use std::time::Instant;

use pahwalk_core::bond_order::{badger_bond_order, local_modes, wilson_residual};
use pahwalk_core::dtqw::rank_nodes;
use pahwalk_core::metrics::{classify_modes, stability_order};
use pahwalk_core::molfile::read_matrices;
use pahwalk_core::{catalog, export, simulate};
use serde_json::json;

use crate::config::{Command, Manifest, RunConfig, MANIFEST_NAME};
use crate::error::{CliError, CliResult};
use crate::output::OutputDir;

pub fn list() {
    println!(
        "{:<14} {:>5} {:>5} {:>7}",
        "molecule", "nodes", "edges", "classes"
    );
    for g in catalog::all() {
        println!(
            "{:<14} {:>5} {:>5} {:>7}",
            g.name(),
            g.node_count(),
            g.edges().len(),
            g.classes().len()
        );
    }
}

/// Validates, runs and records one configured command.
pub fn run(config: &RunConfig) -> CliResult<()> {
    let graphs = config.validate()?;
    let started = Instant::now();
    let mut out = OutputDir::create(&config.output_dir)?;

    let summary = match config.command {
        Command::Simulate => {
            let g = &graphs[0];
            let sim = simulate(g, &config.sim_config())?;
            out.write(
                "site_series.csv",
                &export::site_series_csv(&sim.molecule, &sim.sites),
            )?;
            out.write(
                "site_report.csv",
                &export::site_report_csv(&sim.molecule, &sim.reports),
            )?;
            let modes = classify_modes(&sim.reports, g);
            println!(
                "{}: mean TRP {}",
                sim.molecule,
                export::fmt_sig12(sim.mean_trp)
            );
            match sim.period {
                Some(t) => println!("revival at t = {}", export::fmt_sig12(t)),
                None => println!("no revival within t <= {}", export::fmt_sig12(config.t_max)),
            }
            let high: Vec<usize> = modes.high.iter().map(|n| n + 1).collect();
            println!("high-MAXP sites: {high:?}");
            if let Some(best) = modes.candidates.first() {
                println!("delocalization mode: ({}) {}", best.id, best.description);
            }
            json!({
                "mean_trp": sim.mean_trp,
                "period": sim.period,
                "high_maxp_sites": high,
                "mode": modes.matched_mode(),
            })
        }
        Command::Rank => {
            let g = &graphs[0];
            let cfg = config.rank_config(g)?;
            let ranking = rank_nodes(g, &cfg)?;
            out.write("ranks.csv", &export::ranks_csv(g, &ranking))?;
            let top: Vec<&str> = ranking
                .nodes_with_rank(1)
                .iter()
                .map(|&n| g.label(n))
                .collect();
            println!(
                "{}: {} distinct ranks; rank 1 at {}",
                g.name(),
                ranking.distinct_ranks(),
                top.join(", ")
            );
            json!({
                "steps": cfg.steps,
                "distinct_ranks": ranking.distinct_ranks(),
                "rank_one": top,
            })
        }
        Command::Stability => {
            let inputs = graphs
                .iter()
                .map(|g| Ok(simulate(g, &config.sim_config())?.stability_input()))
                .collect::<CliResult<Vec<_>>>()?;
            let report = stability_order(&inputs)?;
            out.write("stability.csv", &export::stability_csv(&report))?;
            println!("{report}");
            json!({ "order": report.to_string() })
        }
        Command::ExportGraph => {
            let g = &graphs[0];
            out.write(
                "adjacency.csv",
                &export::matrix_csv(g, g.adjacency().matrix()),
            )?;
            out.write("laplacian.csv", &export::matrix_csv(g, &g.laplacian()))?;
            println!("{g}");
            json!({ "nodes": g.node_count(), "edges": g.edges().len() })
        }
    };

    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        outputs: out.written().to_vec(),
        wall_time_seconds: started.elapsed().as_secs_f64(),
        summary,
    };
    let text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| CliError::Compute(format!("cannot serialize manifest: {e}")))?;
    let path = out.write(MANIFEST_NAME, &(text + "\n"))?;
    eprintln!(
        "wrote {}",
        path.parent().unwrap_or(Path::new(".")).display()
    );
    Ok(())
}

pub fn bond_order_scalars(ks: &[f64]) -> CliResult<()> {
    for &k in ks {
        println!("{:.6}", badger_bond_order(k)?);
    }
    Ok(())
}

pub fn bond_order_matrices(path: &Path) -> CliResult<()> {
    let set = read_matrices(path)?;
    let d = set
        .d
        .as_ref()
        .ok_or_else(|| CliError::Config("matrix file needs `d` for local modes".into()))?;
    if let (Some(g), Some(lambda)) = (&set.g, &set.lambda) {
        println!(
            "wilson residual {:.6e}",
            wilson_residual(g, &set.f, d, lambda)?
        );
    }
    println!("{:>4} {:>14} {:>10}", "mode", "k", "BO");
    for m in local_modes(&set.f, d)? {
        println!("{:>4} {:>14.6} {:>10.6}", m.index + 1, m.k_mu, m.bond_order);
    }
    Ok(())
}
