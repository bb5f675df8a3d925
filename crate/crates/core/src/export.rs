//! CSV rendering. Every table has a header row, `\n` line endings and
//! floats at 12 significant digits; nodes are written 1-based.

use std::fmt::Write;

use nalgebra::DMatrix;

use crate::dtqw::NodeRanking;
use crate::graph::MoleculeGraph;
use crate::metrics::{SiteReport, SiteSeries, StabilityReport};

/// `%.12g`: shortest of fixed or exponent notation, trailing zeros removed.
pub fn fmt_sig12(v: f64) -> String {
    const DIGITS: i32 = 12;
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..DIGITS).contains(&exp) {
        let fixed = format!("{:.*}", (DIGITS - 1 - exp) as usize, v);
        trim_zeros(&fixed).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn site_series_csv(molecule: &str, sites: &[SiteSeries]) -> String {
    let mut out = String::from("molecule,node,t,maxp,trp\n");
    for s in sites {
        for i in 0..s.len() {
            let _ = writeln!(
                out,
                "{molecule},{},{},{},{}",
                s.node + 1,
                fmt_sig12(s.times[i]),
                fmt_sig12(s.maxp[i]),
                fmt_sig12(s.trp[i])
            );
        }
    }
    out
}

/// Class ids are written 1-based.
pub fn site_report_csv(molecule: &str, reports: &[SiteReport]) -> String {
    let mut out = String::from("molecule,node,class,maxp_mean,trp_mean\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{molecule},{},{},{},{}",
            r.node + 1,
            r.class_id + 1,
            fmt_sig12(r.maxp_mean),
            fmt_sig12(r.trp_mean)
        );
    }
    out
}

/// Near-tied entries carry a `~` suffix on their rank.
pub fn stability_csv(report: &StabilityReport) -> String {
    let mut out = String::from("molecule,mean_trp,rank\n");
    for e in &report.entries {
        let tie = if e.tied_with_previous { "~" } else { "" };
        let _ = writeln!(
            out,
            "{},{},{}{tie}",
            e.molecule,
            fmt_sig12(e.mean_trp),
            e.rank
        );
    }
    out
}

pub fn ranks_csv(graph: &MoleculeGraph, ranking: &NodeRanking) -> String {
    let mut out = String::from("node,label,score,rank\n");
    for (i, (score, rank)) in ranking.scores.iter().zip(&ranking.ranks).enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{rank}",
            i + 1,
            graph.label(i),
            fmt_sig12(*score)
        );
    }
    out
}

/// Square matrix with a `node` column and one column per node label.
pub fn matrix_csv(graph: &MoleculeGraph, m: &DMatrix<f64>) -> String {
    let mut out = String::from("node");
    for label in graph.labels() {
        let _ = write!(out, ",{label}");
    }
    out.push('\n');
    for i in 0..m.nrows() {
        out.push_str(graph.label(i));
        for j in 0..m.ncols() {
            let _ = write!(out, ",{}", fmt_sig12(m[(i, j)]));
        }
        out.push('\n');
    }
    out
}
