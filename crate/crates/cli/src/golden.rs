//! The golden constants table and its re-derivation from library routes.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use zalpha_core::closedform::log_z_closed;
use zalpha_core::hurwitz::{euler_gamma, gamma_one_third_agm, glaisher_kinkelin, hurwitz_zeta, log_bendersky, EMConfig};
use zalpha_core::quad::{integrate_single_d, QuadConfig};

use crate::error::CliError;
use crate::eval::{Verdict, SCHEMA_VERSION};

/// Largest accepted gap between a re-derived value and its golden entry.
pub const GOLDEN_TOL: f64 = 1e-12;

/// The table shipped with the crate; `--golden` reads another file instead.
pub const BUILTIN: &str = include_str!("../golden/constants.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    PaperClosedForm,
    DerivedOracle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenEntry {
    pub name: String,
    pub expression: String,
    pub value: String,
    pub source: Source,
}

fn corrupt(msg: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("corrupt golden file: {msg}"))
}

fn significant_digits(value: &str) -> usize {
    let mantissa = value.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    digits.trim_start_matches('0').len()
}

pub fn parse(text: &str) -> Result<Vec<GoldenEntry>, CliError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().map_err(corrupt)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["name", "expression", "value", "source"] {
        return Err(corrupt(format!("unexpected header {headers:?}")));
    }
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for row in reader.deserialize::<GoldenEntry>() {
        let entry = row.map_err(corrupt)?;
        let v: f64 = entry
            .value
            .parse()
            .map_err(|_| corrupt(format!("value of `{}` is not a number", entry.name)))?;
        if !v.is_finite() {
            return Err(corrupt(format!("value of `{}` is not finite", entry.name)));
        }
        if significant_digits(&entry.value) < 15 {
            return Err(corrupt(format!("value of `{}` has fewer than 15 significant digits", entry.name)));
        }
        if !seen.insert(entry.name.clone()) {
            return Err(corrupt(format!("duplicate name `{}`", entry.name)));
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load(path: Option<&Path>) -> Result<Vec<GoldenEntry>, CliError> {
    match path {
        None => parse(BUILTIN),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            parse(&text)
        }
    }
}

/// Library value for a golden name, with the route that produced it.
pub fn derive(name: &str) -> Result<(f64, &'static str), CliError> {
    let closed = |d: u32, u: f64| -> Result<f64, CliError> { Ok(log_z_closed(d, u)?.value) };
    let v = match name {
        "euler_gamma" => (euler_gamma(), "hurwitz: -digamma(1)"),
        "log_2pi" => ((2.0 * PI).ln(), "std: ln(2 pi)"),
        "glaisher_A" => (glaisher_kinkelin(), "hurwitz: exp(1/12 - zeta'(-1))"),
        "log_A2" => (
            log_bendersky(2, &EMConfig::for_order(-2.0, 1.0))?,
            "hurwitz: log_bendersky(2)",
        ),
        "zeta3" => (hurwitz_zeta(3.0, 1.0, &EMConfig::default())?.value, "hurwitz: zeta(3, 1)"),
        "gamma_one_third" => (gamma_one_third_agm(), "hurwitz: AGM closed form"),
        "log_z_minus1" => (
            integrate_single_d(0, 1.0, &QuadConfig::default())?.value,
            "quad: integrate_single_d(0, 1)",
        ),
        "log_z0" => (closed(0, 1.0)?, "closedform: log_z_closed(0, 1)"),
        "log_z1" => (closed(1, 1.0)?, "closedform: log_z_closed(1, 1)"),
        "log_z2" => (closed(2, 1.0)?, "closedform: log_z_closed(2, 1)"),
        "log_z3" => (closed(3, 1.0)?, "closedform: log_z_closed(3, 1)"),
        "log_z1_half" => (closed(1, 0.5)?, "closedform: log_z_closed(1, 1/2)"),
        "log_z1_third" => (closed(1, 1.0 / 3.0)?, "closedform: log_z_closed(1, 1/3)"),
        "log_combo_u2" => (
            closed(0, 2.0)? + closed(1, 2.0)?,
            "closedform: log_z_closed(0, 2) + log_z_closed(1, 2)",
        ),
        other => return Err(corrupt(format!("unknown constant `{other}`"))),
    };
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantRow {
    pub name: String,
    pub expression: String,
    pub value: f64,
    pub golden: String,
    pub abs_diff: f64,
    pub route: String,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsTable {
    pub schema_version: u32,
    pub tolerance: f64,
    pub constants: Vec<ConstantRow>,
    pub verdict: Verdict,
}

pub fn table(entries: &[GoldenEntry]) -> Result<ConstantsTable, CliError> {
    let mut rows = Vec::with_capacity(entries.len());
    for e in entries {
        let (value, route) = derive(&e.name)?;
        let golden: f64 = e.value.parse().map_err(|_| corrupt(&e.name))?;
        rows.push(ConstantRow {
            name: e.name.clone(),
            expression: e.expression.clone(),
            value,
            golden: e.value.clone(),
            abs_diff: (value - golden).abs(),
            route: route.into(),
            source: e.source,
        });
    }
    let pass = rows.iter().all(|r| r.abs_diff <= GOLDEN_TOL);
    Ok(ConstantsTable {
        schema_version: SCHEMA_VERSION,
        tolerance: GOLDEN_TOL,
        constants: rows,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}

pub fn render_plain(t: &ConstantsTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<16} {:>20} {:>10}  route", "name", "value", "|diff|");
    for r in &t.constants {
        let _ = writeln!(out, "{:<16} {:>20.15} {:>10.1e}  {}", r.name, r.value, r.abs_diff, r.route);
    }
    let failed = t.constants.iter().filter(|r| r.abs_diff > t.tolerance).count();
    let _ = writeln!(
        out,
        "{} constants, {} outside {:e} of the golden values",
        t.constants.len(),
        failed,
        t.tolerance
    );
    out
}

pub fn render_csv(t: &ConstantsTable) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "expression", "value", "golden", "abs_diff", "route"]).map_err(io)?;
    for r in &t.constants {
        w.write_record([
            r.name.as_str(),
            r.expression.as_str(),
            &format!("{:e}", r.value),
            r.golden.as_str(),
            &format!("{:e}", r.abs_diff),
            r.route.as_str(),
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
    fn builtin_table_round_trips() {
        let entries = load(None).unwrap();
        assert!(entries.len() >= 10);
        let t = table(&entries).unwrap();
        for r in &t.constants {
            assert!(r.abs_diff <= GOLDEN_TOL, "{r:?}");
        }
        assert_eq!(t.verdict, Verdict::Pass);
    }

    #[test]
    fn rejects_malformed_tables() {
        let header = "name,expression,value,source\n";
        let cases = [
            "nonsense\n".to_string(),
            format!("{header}zeta3,zeta(3),abc,derived_oracle\n"),
            format!("{header}zeta3,zeta(3),1.2020569,derived_oracle\n"),
            format!("{header}zeta3,zeta(3),inf,derived_oracle\n"),
            format!("{header}zeta3,zeta(3),1.202056903159594285,guess\n"),
            format!("{header}zeta3,z,1.202056903159594285,derived_oracle\nzeta3,z,1.202056903159594285,derived_oracle\n"),
        ];
        for text in cases {
            let err = parse(&text).unwrap_err();
            assert_eq!(err.exit_code(), 3, "{text}");
        }
        let unknown = format!("{header}mystery,x,1.000000000000000000,derived_oracle\n");
        assert!(table(&parse(&unknown).unwrap()).is_err());
    }

    #[test]
    fn counts_significant_digits() {
        assert_eq!(significant_digits("0.03044845705839327078"), 19);
        assert_eq!(significant_digits("1.000000000000000000000000"), 25);
        assert_eq!(significant_digits("1.5e-3"), 2);
    }
}
