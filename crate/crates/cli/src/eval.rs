//! Evaluation of `log z_alpha(u)` by one or all routes, with the report that
//! records pairwise deviations.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use zalpha_core::closedform::{log_z_closed, log_z_explicit_u1};
use zalpha_core::quad::{integrate_double, integrate_prelim, integrate_single_d, QuadConfig};
use zalpha_core::series::{log_z_direct, Approximation, DifferenceMethod, EvalParams};
use zalpha_core::Error;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Closed,
    Series,
    IntegralSingle,
    IntegralDouble,
    IntegralPrelim,
    All,
}

/// One way of computing `log z_alpha(u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteKind {
    Closed,
    Bendersky,
    Series,
    Single,
    Double,
    Prelim,
}

impl RouteKind {
    pub const ALL: [RouteKind; 6] = [
        RouteKind::Closed,
        RouteKind::Bendersky,
        RouteKind::Series,
        RouteKind::Single,
        RouteKind::Double,
        RouteKind::Prelim,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RouteKind::Closed => "closed_form",
            RouteKind::Bendersky => "closed_form_bendersky",
            RouteKind::Series => "series",
            RouteKind::Single => "integral_single",
            RouteKind::Double => "integral_double",
            RouteKind::Prelim => "integral_prelim",
        }
    }

    fn from_arg(arg: RouteArg) -> Option<RouteKind> {
        match arg {
            RouteArg::Closed => Some(RouteKind::Closed),
            RouteArg::Series => Some(RouteKind::Series),
            RouteArg::IntegralSingle => Some(RouteKind::Single),
            RouteArg::IntegralDouble => Some(RouteKind::Double),
            RouteArg::IntegralPrelim => Some(RouteKind::Prelim),
            RouteArg::All => None,
        }
    }
}

fn route_arg_name(arg: RouteArg) -> String {
    arg.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalRequest {
    pub alpha: f64,
    pub d: Option<u32>,
    pub u: f64,
    pub tol: f64,
    pub max_terms: u64,
    pub quad: QuadConfig,
    pub timing: bool,
}

impl EvalRequest {
    /// Request for real `alpha`; integer values also enable the closed form.
    pub fn new(alpha: f64, u: f64) -> Self {
        let d = (alpha >= 0.0 && alpha.fract() == 0.0 && alpha <= u32::MAX as f64).then_some(alpha as u32);
        EvalRequest {
            alpha,
            d,
            u,
            tol: 1e-6,
            max_terms: 2000,
            quad: QuadConfig::default(),
            timing: false,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", self.tol)));
        }
        if self.max_terms == 0 {
            return Err(CliError::Usage("--max-terms must be at least 1".into()));
        }
        self.quad.validate()?;
        EvalParams::real(self.alpha, self.u).check_product()?;
        Ok(())
    }

    fn inapplicable(&self, kind: RouteKind) -> Option<String> {
        let integer_from_minus_one = self.alpha >= -1.0 && self.alpha.fract() == 0.0;
        match kind {
            RouteKind::Closed if self.d.is_none() => Some("the closed form needs an integer alpha >= 0".into()),
            RouteKind::Bendersky if self.d.unwrap_or(0) == 0 || self.u != 1.0 => {
                Some("the Bendersky form needs integer alpha >= 1 and u = 1".into())
            }
            RouteKind::Single if !integer_from_minus_one => {
                Some("the single integral needs an integer alpha >= -1".into())
            }
            RouteKind::Double | RouteKind::Prelim if self.alpha <= -2.0 => {
                Some("the integral representations need alpha > -2".into())
            }
            _ => None,
        }
    }

    fn run(&self, kind: RouteKind) -> Result<(Approximation, Option<f64>), Error> {
        let (alpha, u, q) = (self.alpha, self.u, &self.quad);
        match kind {
            RouteKind::Closed => log_z_closed(self.d.unwrap_or(0), u).map(|a| (a, None)),
            RouteKind::Bendersky => log_z_explicit_u1(self.d.unwrap_or(0)).map(|a| (a, None)),
            RouteKind::Series => {
                let r = log_z_direct(&EvalParams::real(alpha, u), self.max_terms, DifferenceMethod::FrullaniQuadrature)?;
                Ok((r.extrapolated, Some(r.raw.value)))
            }
            RouteKind::Single => integrate_single_d((alpha + 1.0) as u32, u, q).map(|a| (a, None)),
            RouteKind::Double => integrate_double(alpha + 1.0, u, q).map(|a| (a, None)),
            RouteKind::Prelim => integrate_prelim(alpha + 1.0, u, q).map(|a| (a, None)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub alpha: f64,
    pub u: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigEcho {
    pub tol: f64,
    pub max_terms: u64,
    pub quad: QuadConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub route: String,
    pub params: Params,
    pub config: ConfigEcho,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RouteResult {
    pub route: String,
    pub value: f64,
    pub err_est: f64,
    /// Series terms or quadrature nodes.
    pub terms: u64,
    /// Plain partial sum, for the series route.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_value: Option<f64>,
    /// Only present with `--timing`, so default output stays reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RouteNote {
    pub route: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Deviation {
    pub a: String,
    pub b: String,
    pub abs_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalReport {
    pub schema_version: u32,
    pub request: Request,
    pub results: Vec<RouteResult>,
    /// Routes left out because they do not apply to the parameters.
    pub skipped: Vec<RouteNote>,
    /// Routes that ran but failed to converge.
    pub errors: Vec<RouteNote>,
    pub deviations: Vec<Deviation>,
    pub verdict: Verdict,
}

impl EvalReport {
    pub fn max_deviation(&self) -> Option<&Deviation> {
        self.deviations.iter().max_by(|a, b| a.abs_diff.total_cmp(&b.abs_diff))
    }
}

pub fn evaluate(route: RouteArg, req: &EvalRequest) -> Result<EvalReport, CliError> {
    req.validate()?;
    let kinds: Vec<RouteKind> = match RouteKind::from_arg(route) {
        Some(kind) => {
            if let Some(reason) = req.inapplicable(kind) {
                return Err(CliError::Inapplicable {
                    route: route_arg_name(route),
                    reason,
                });
            }
            vec![kind]
        }
        None => RouteKind::ALL.to_vec(),
    };

    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut errors = Vec::new();
    for kind in kinds {
        if let Some(reason) = req.inapplicable(kind) {
            skipped.push(RouteNote {
                route: kind.tag().into(),
                reason,
            });
            continue;
        }
        let start = Instant::now();
        match req.run(kind) {
            Ok((a, raw)) => results.push(RouteResult {
                route: kind.tag().into(),
                value: a.value,
                err_est: a.err_est,
                terms: a.terms_used,
                raw_value: raw,
                wall_ms: req.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            }),
            Err(e @ Error::NoConvergence { .. }) => errors.push(RouteNote {
                route: kind.tag().into(),
                reason: e.to_string(),
            }),
            Err(e) => return Err(e.into()),
        }
    }

    let mut deviations = Vec::new();
    for (i, a) in results.iter().enumerate() {
        for b in &results[i + 1..] {
            deviations.push(Deviation {
                a: a.route.clone(),
                b: b.route.clone(),
                abs_diff: (a.value - b.value).abs(),
            });
        }
    }
    let pass = errors.is_empty() && !results.is_empty() && deviations.iter().all(|d| d.abs_diff < req.tol);
    Ok(EvalReport {
        schema_version: SCHEMA_VERSION,
        request: Request {
            route: route_arg_name(route),
            params: Params {
                alpha: req.alpha,
                u: req.u,
                d: req.d,
            },
            config: ConfigEcho {
                tol: req.tol,
                max_terms: req.max_terms,
                quad: req.quad,
            },
        },
        results,
        skipped,
        errors,
        deviations,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}

pub fn render_plain(report: &EvalReport) -> String {
    let p = &report.request.params;
    let mut out = String::new();
    let _ = writeln!(out, "log z_alpha(u) at alpha = {}, u = {}", p.alpha, p.u);
    let _ = writeln!(out, "{:<24} {:>22} {:>10} {:>8}", "route", "value", "err_est", "terms");
    for r in &report.results {
        let _ = write!(out, "{:<24} {:>22.15} {:>10.1e} {:>8}", r.route, r.value, r.err_est, r.terms);
        if let Some(ms) = r.wall_ms {
            let _ = write!(out, " {ms:>9.2} ms");
        }
        out.push('\n');
        if let Some(raw) = r.raw_value {
            let _ = writeln!(out, "{:<24} {:>22.15}", "  (raw partial sum)", raw);
        }
    }
    for s in &report.skipped {
        let _ = writeln!(out, "skipped {}: {}", s.route, s.reason);
    }
    for e in &report.errors {
        let _ = writeln!(out, "failed {}: {}", e.route, e.reason);
    }
    if let Some(d) = report.max_deviation() {
        let _ = writeln!(out, "max deviation {:.2e} ({} vs {})", d.abs_diff, d.a, d.b);
    }
    let verdict = match report.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
    };
    let _ = writeln!(out, "verdict: {verdict} (tol {:e})", report.request.config.tol);
    out
}

pub fn render_csv(report: &EvalReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(["route", "value", "err_est", "terms", "verdict"]).map_err(io)?;
    let verdict = serde_json::to_value(report.verdict).map_err(|e| CliError::Io(e.to_string()))?;
    let verdict = verdict.as_str().unwrap_or_default().to_string();
    for r in &report.results {
        w.write_record([
            r.route.clone(),
            format!("{:e}", r.value),
            format!("{:e}", r.err_est),
            r.terms.to_string(),
            verdict.clone(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z1_all_routes_pass() {
        let report = evaluate(RouteArg::All, &EvalRequest::new(1.0, 1.0)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.results.len(), 6);
        let closed = &report.results[0];
        assert!((closed.value - (-0.5 + 0.5 * (2.0 * std::f64::consts::PI).ln())).abs() < 1e-14);
    }

    #[test]
    fn non_integer_alpha_skips_integer_routes() {
        let report = evaluate(RouteArg::All, &EvalRequest::new(0.5, 2.0)).unwrap();
        let skipped: Vec<&str> = report.skipped.iter().map(|s| s.route.as_str()).collect();
        assert_eq!(skipped, ["closed_form", "closed_form_bendersky", "integral_single"]);
        assert_eq!(report.verdict, Verdict::Pass);
        let err = evaluate(RouteArg::IntegralSingle, &EvalRequest::new(0.5, 2.0)).unwrap_err();
        assert!(matches!(err, CliError::Inapplicable { .. }));
    }

    #[test]
    fn domain_errors_are_reported() {
        let err = evaluate(RouteArg::Closed, &EvalRequest::new(0.0, 0.0)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = evaluate(RouteArg::Series, &EvalRequest::new(-3.0, 1.0)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = evaluate(RouteArg::Closed, &EvalRequest::new(2.0, 0.5)).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: EvalReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        let extra = text.replacen("\"verdict\"", "\"surprise\":1,\"verdict\"", 1);
        assert!(serde_json::from_str::<EvalReport>(&extra).is_err());
    }
}
