//! Route agreement over a grid of integer orders and shifts.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::CrosscheckArgs;
use crate::error::CliError;
use crate::eval::{evaluate, EvalReport, EvalRequest, RouteArg, Verdict, SCHEMA_VERSION};

/// One grid cell; `report` is absent when the cell could not be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell {
    pub d: u32,
    pub u: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<EvalReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrosscheckReport {
    pub schema_version: u32,
    pub tol: f64,
    pub cells: Vec<Cell>,
    pub passed: usize,
    pub failed: usize,
    pub verdict: Verdict,
}

fn cell(d: u32, u: f64, base: &EvalRequest) -> Cell {
    let mut req = EvalRequest::new(d as f64, u);
    req.tol = base.tol;
    req.max_terms = base.max_terms;
    req.quad = base.quad;
    // failures are recorded per cell so one bad point does not hide the rest
    match evaluate(RouteArg::All, &req) {
        Ok(report) => Cell {
            d,
            u,
            verdict: report.verdict,
            report: Some(report),
            error: None,
        },
        Err(e) => Cell {
            d,
            u,
            report: None,
            error: Some(e.to_string()),
            verdict: Verdict::Fail,
        },
    }
}

pub fn run(args: &CrosscheckArgs) -> Result<CrosscheckReport, CliError> {
    if args.grid_d.is_empty() || args.grid_u.is_empty() {
        return Err(CliError::Usage("empty grid".into()));
    }
    let mut base = EvalRequest::new(0.0, 1.0);
    base.tol = args.tol;
    base.max_terms = args.max_terms;
    base.quad = args.quad.config();
    if !(base.tol.is_finite() && base.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", base.tol)));
    }
    base.quad.validate()?;

    let points: Vec<(u32, f64)> = args
        .grid_d
        .iter()
        .flat_map(|&d| args.grid_u.iter().map(move |&u| (d, u)))
        .collect();
    let cells: Vec<Cell> = if args.parallel {
        points.par_iter().map(|&(d, u)| cell(d, u, &base)).collect()
    } else {
        points.iter().map(|&(d, u)| cell(d, u, &base)).collect()
    };
    let passed = cells.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let failed = cells.len() - passed;
    Ok(CrosscheckReport {
        schema_version: SCHEMA_VERSION,
        tol: args.tol,
        cells,
        passed,
        failed,
        verdict: if failed == 0 { Verdict::Pass } else { Verdict::Fail },
    })
}

fn cell_summary(c: &Cell) -> (String, String) {
    match (&c.report, &c.error) {
        (Some(r), _) => {
            let closed = r
                .results
                .first()
                .map(|x| format!("{:.15}", x.value))
                .unwrap_or_else(|| "-".into());
            let dev = r
                .max_deviation()
                .map(|d| format!("{:.1e} ({} vs {})", d.abs_diff, d.a, d.b))
                .unwrap_or_else(|| "-".into());
            (closed, dev)
        }
        (None, Some(e)) => ("-".into(), e.clone()),
        (None, None) => ("-".into(), "-".into()),
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
    }
}

pub fn render_plain(r: &CrosscheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>3} {:>10} {:>20}  {:<5} max deviation", "d", "u", "closed form", "");
    for c in &r.cells {
        let (closed, dev) = cell_summary(c);
        let _ = writeln!(out, "{:>3} {:>10} {:>20}  {:<5} {}", c.d, c.u, closed, verdict_word(c.verdict), dev);
    }
    let _ = writeln!(
        out,
        "crosscheck: {} cells, {} passed, {} failed (tol {:e})",
        r.cells.len(),
        r.passed,
        r.failed,
        r.tol
    );
    out
}

pub fn render_csv(r: &CrosscheckReport) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["d", "u", "route", "value", "err_est", "verdict"]).map_err(io)?;
    for c in &r.cells {
        let verdict = verdict_word(c.verdict).to_lowercase();
        match &c.report {
            Some(rep) => {
                for x in &rep.results {
                    w.write_record([
                        c.d.to_string(),
                        c.u.to_string(),
                        x.route.clone(),
                        format!("{:e}", x.value),
                        format!("{:e}", x.err_est),
                        verdict.clone(),
                    ])
                    .map_err(io)?;
                }
            }
            None => {
                let e = c.error.clone().unwrap_or_default();
                w.write_record([c.d.to_string(), c.u.to_string(), "error".into(), e, String::new(), verdict])
                    .map_err(io)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
