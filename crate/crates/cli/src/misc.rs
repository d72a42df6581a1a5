//! Direct access to the r-Stirling rows, the Hurwitz zeta and the worked examples.

use std::fmt::Write as _;

use serde::Serialize;
use zalpha_core::closedform::{worked_example, WorkedExample};
use zalpha_core::exactnum::parse_rational;
use zalpha_core::hurwitz::{hurwitz_zeta, hurwitz_zeta_deriv, EMConfig};
use zalpha_core::rstirling::{row_by_gf, shift_for};
use zalpha_core::Error;

use crate::args::{parse_real, ExamplesArgs, Format, StirlingArgs, ZetaArgs};
use crate::error::CliError;

pub fn stirling(a: &StirlingArgs) -> Result<String, CliError> {
    if let Some(k) = a.k {
        if k > a.n {
            return Err(Error::Domain(format!("entry index k={k} outside 0..={}", a.n)).into());
        }
    }
    let values: Vec<String> = if a.exact {
        let u = parse_rational(&a.u)
            .ok_or_else(|| CliError::Usage(format!("--exact needs a rational u such as 1/2, got `{}`", a.u)))?;
        row_by_gf(a.n, shift_for(&u)).coeffs().iter().map(|c| c.to_string()).collect()
    } else {
        let u = parse_real(&a.u).map_err(CliError::Usage)?;
        row_by_gf(a.n, shift_for(&u)).coeffs().iter().map(|c| format!("{c:.17e}")).collect()
    };
    let mut out = String::new();
    match a.k {
        Some(k) => {
            let _ = writeln!(out, "{}", values[k]);
        }
        None => {
            for (k, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{k} {v}");
            }
        }
    }
    Ok(out)
}

pub fn zeta(a: &ZetaArgs) -> Result<String, CliError> {
    let cfg = EMConfig::for_order(a.s, a.u);
    let mut out = String::new();
    if a.deriv {
        let z = hurwitz_zeta_deriv(a.s, a.u, &cfg)?;
        let _ = writeln!(out, "zeta({}, {}) = {:.17e}", a.s, a.u, z.value);
        let _ = writeln!(out, "zeta'({}, {}) = {:.17e}", a.s, a.u, z.deriv.unwrap_or(f64::NAN));
    } else {
        let z = hurwitz_zeta(a.s, a.u, &cfg)?;
        let _ = writeln!(out, "zeta({}, {}) = {:.17e}", a.s, a.u, z.value);
    }
    Ok(out)
}

#[derive(Serialize)]
struct ExampleRow {
    name: String,
    value: f64,
    err_est: f64,
}

pub fn examples(a: &ExamplesArgs) -> Result<String, CliError> {
    let chosen: Vec<WorkedExample> = match &a.name {
        Some(name) => vec![name.parse()?],
        None => vec![WorkedExample::Z1Half, WorkedExample::Z1Third, WorkedExample::ComboU2],
    };
    let mut rows = Vec::new();
    for ex in chosen {
        let v = worked_example(ex)?;
        rows.push(ExampleRow {
            name: ex.to_string(),
            value: v.value,
            err_est: v.err_est,
        });
    }
    match a.format {
        Format::Json => crate::to_json(&rows),
        Format::Csv => {
            let mut out = String::from("name,value,err_est\n");
            for r in &rows {
                let _ = writeln!(out, "\"{}\",{:e},{:e}", r.name, r.value, r.err_est);
            }
            Ok(out)
        }
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{:<12} log value {:.15}  value {:.15}", r.name, r.value, r.value.exp());
            }
            Ok(out)
        }
    }
}
