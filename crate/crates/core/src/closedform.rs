//! Closed forms for `S_d(s, u)` and `log z_d(u)` at integer `d`.
//!
//! Both are finite combinations of Hurwitz zeta values weighted by the
//! shifted r-Stirling row `d` at `r = 1 - u`. At `u = 1` the zeta derivatives
//! can be traded for Bendersky constants, which gives a second, independent
//! decomposition of the same number.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::{self, bernoulli_number, harmonic, integer, stirling1_unsigned, BigRational};
use crate::hurwitz::{
    agm, digamma, euler_gamma, hurwitz_zeta, hurwitz_zeta_deriv, log_bendersky, log_gamma,
    zeta_at_nonpositive_integer, EMConfig,
};
use crate::rstirling::{row_by_gf, shift_for};
use crate::series::{Approximation, Route};
use crate::sum::CompensatedSum;

/// The `k`-th summand `T_k(u)` of the closed form for `log z_d(u)`:
/// `-psi(u)` for `k = 0`, else `zeta(1-k, u) - k zeta'(1-k, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegularizedTerm {
    pub k: u32,
    pub value: f64,
    pub err_est: f64,
}

impl RegularizedTerm {
    pub fn new(k: u32, u: f64) -> Result<Self> {
        check_u(u)?;
        if k == 0 {
            // the pole of zeta(s, u) at s = 1 is cancelled by the factor s - 1;
            // what is left is the constant term of the Laurent expansion
            let v = -digamma(u)?;
            return Ok(RegularizedTerm {
                k,
                value: v,
                err_est: 8.0 * f64::EPSILON * v.abs().max(1.0),
            });
        }
        let s = 1.0 - k as f64;
        let z = hurwitz_zeta_deriv(s, u, &EMConfig::for_order(s, u))?;
        let exact = zeta_at_nonpositive_integer(k as u64, u);
        let kf = k as f64;
        let deriv = z.deriv.expect("derivative requested");
        Ok(RegularizedTerm {
            k,
            value: exact - kf * deriv,
            err_est: kf * z.err_est + 4.0 * f64::EPSILON * exact.abs(),
        })
    }
}

fn check_u(u: f64) -> Result<()> {
    if u.is_finite() && u > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("u must be positive and finite, got {u}")))
    }
}

fn factorial(d: u32) -> f64 {
    (1..=d).map(|i| i as f64).product()
}

/// `S_d(s, u) = (1/d!) sum_k c_k (s - k - 1) zeta(s - k, u)` with `c` the
/// r-Stirling row `d` at `r = 1 - u`.
///
/// The points `s = 1, ..., d + 1` are rejected: one of the zeta values sits
/// on its pole there even though the sum is finite.
pub fn s_d_closed(d: u32, s: f64, u: f64) -> Result<Approximation> {
    check_u(u)?;
    if !s.is_finite() {
        return Err(domain("s must be finite"));
    }
    if s.fract() == 0.0 && s >= 1.0 && s <= d as f64 + 1.0 {
        return Err(Error::Pole(format!("s = {s} hits a zeta pole in the closed form for d = {d}")));
    }
    let row = row_by_gf(d as usize, shift_for(&u));
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    for (k, c) in row.coeffs().iter().enumerate() {
        let arg = s - k as f64;
        let (z, zerr) = if arg <= 0.0 && arg.fract() == 0.0 {
            (zeta_at_nonpositive_integer((1.0 - arg) as u64, u), 0.0)
        } else {
            let zv = hurwitz_zeta(arg, u, &EMConfig::for_order(arg, u))?;
            (zv.value, zv.err_est)
        };
        let w = c * (arg - 1.0);
        acc.add(w * z);
        err += (w * zerr).abs();
    }
    let df = factorial(d);
    Ok(Approximation {
        value: acc.value() / df,
        err_est: (err + 4.0 * f64::EPSILON * acc.magnitude()) / df,
        terms_used: d as u64 + 1,
        route: Route::ClosedForm,
    })
}

/// `log z_d(u) = log(u)/(d+1) + (1/d!) sum_k c_k T_k(u)`.
pub fn log_z_closed(d: u32, u: f64) -> Result<Approximation> {
    check_u(u)?;
    let row = row_by_gf(d as usize, shift_for(&u));
    let mut acc = CompensatedSum::new();
    let mut err = 0.0;
    for (k, c) in row.coeffs().iter().enumerate() {
        let t = RegularizedTerm::new(k as u32, u)?;
        acc.add(c * t.value);
        err += (c * t.err_est).abs();
    }
    let df = factorial(d);
    let head = u.ln() / (d as f64 + 1.0);
    let value = head + acc.value() / df;
    Ok(Approximation {
        value,
        err_est: (err + 4.0 * f64::EPSILON * acc.magnitude()) / df + f64::EPSILON * head.abs(),
        terms_used: d as u64 + 1,
        route: Route::ClosedForm,
    })
}

/// `log z_d(1)` through Bendersky constants:
/// `(log 2pi - 1)/(2d) + (1/d!)(-sum_k [d,2k] H_{2k} B_{2k} + sum_k [d,k+1] (k+1) log A_k)`.
pub fn log_z_explicit_u1(d: u32) -> Result<Approximation> {
    if d == 0 {
        return Err(domain("the Bendersky form needs d >= 1"));
    }
    let d64 = d as u64;
    let mut rational = BigRational::zero();
    for k in 1..=d64 / 2 {
        rational -= stirling1_unsigned(d64, 2 * k as i64) * harmonic(2 * k) * bernoulli_number(2 * k);
    }
    let mut acc = CompensatedSum::new();
    acc.add(exactnum::to_f64(&rational));
    for k in 1..d64 {
        let weight = stirling1_unsigned(d64, k as i64 + 1) * integer(k as i64 + 1);
        let log_a = log_bendersky(k, &EMConfig::for_order(-(k as f64), 1.0))?;
        acc.add(exactnum::to_f64(&weight) * log_a);
    }
    let df = factorial(d);
    let head = ((2.0 * PI).ln() - 1.0) / (2.0 * d as f64);
    Ok(Approximation {
        value: head + acc.value() / df,
        err_est: 64.0 * f64::EPSILON * (acc.magnitude() / df + head.abs()),
        terms_used: d as u64,
        route: Route::ClosedForm,
    })
}

/// Named constants with a known elementary closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WorkedExample {
    /// `log z_1(u)` written with `psi` and `log Gamma`.
    Z1U(f64),
    /// `log z_1(1/2) = log 2 + gamma/2`.
    Z1Half,
    /// `log z_1(1/3)` through `Gamma(1/3)` in AGM form.
    Z1Third,
    /// `log z_0(2) + log z_1(2) = log 4 + (1/2) log pi - 3/2`.
    ComboU2,
}

impl WorkedExample {
    pub const TAGS: [&'static str; 4] = ["z1_u(<u>)", "z1_half", "z1_third", "combo_u2"];
}

impl fmt::Display for WorkedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkedExample::Z1U(u) => write!(f, "z1_u({u})"),
            WorkedExample::Z1Half => f.write_str("z1_half"),
            WorkedExample::Z1Third => f.write_str("z1_third"),
            WorkedExample::ComboU2 => f.write_str("combo_u2"),
        }
    }
}

impl FromStr for WorkedExample {
    type Err = Error;

    fn from_str(tag: &str) -> Result<Self> {
        let tag = tag.trim();
        match tag {
            "z1_half" => return Ok(WorkedExample::Z1Half),
            "z1_third" => return Ok(WorkedExample::Z1Third),
            "combo_u2" => return Ok(WorkedExample::ComboU2),
            _ => {}
        }
        if let Some(arg) = tag.strip_prefix("z1_u(").and_then(|r| r.strip_suffix(')')) {
            if let Ok(u) = arg.trim().parse::<f64>() {
                return Ok(WorkedExample::Z1U(u));
            }
        }
        Err(Error::UnknownExample(tag.to_string()))
    }
}

pub fn worked_example(example: WorkedExample) -> Result<Approximation> {
    let ln2pi = (2.0 * PI).ln();
    let value = match example {
        WorkedExample::Z1U(u) => {
            check_u(u)?;
            0.5 * u.ln() + (u - 1.0) * digamma(u)? + 0.5 - u - log_gamma(u)? + 0.5 * ln2pi
        }
        WorkedExample::Z1Half => 2f64.ln() + 0.5 * euler_gamma(),
        WorkedExample::Z1Third => {
            let m = agm(2.0, (2.0 + 3f64.sqrt()).sqrt())?;
            let algebraic = (3.5 * 3f64.ln() - 5.0 / 3.0 * 2f64.ln() - PI.ln()) / 6.0;
            algebraic + (0.5 + PI / 3f64.sqrt() + 2.0 * euler_gamma() + m.ln()) / 3.0
        }
        WorkedExample::ComboU2 => 4f64.ln() + 0.5 * PI.ln() - 1.5,
    };
    Ok(Approximation {
        value,
        err_est: 16.0 * f64::EPSILON * value.abs().max(1.0),
        terms_used: 1,
        route: Route::ClosedForm,
    })
}
