//! Direct evaluation of `t_n(u)`, the truncated double sum `S_alpha(s, u)`
//! and the product `z_alpha(u)` by partial sums.
//!
//! Inner alternating sums lose about one bit per unit of `n`, so beyond small
//! `n` they are taken from the integral representation
//! `sum_k (-1)^k C(n,k) (k+u)^{1-s} = int_0^inf (1-e^{-t})^n e^{-ut} t^{s-2} dt / Gamma(s-1)`
//! and, for logarithms, `log t_n(u) = int_0^inf (1-e^{-t})^n e^{-ut} dt / t`.
//! All `n` are integrated together on one exp-sinh grid.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::hurwitz::{euler_gamma, recip_gamma};
use crate::quad::engine::{integrate, integrate_vec, Domain, Tolerance};
use crate::sum::CompensatedSum;

/// Largest `n` for which the alternating inner sum is evaluated literally.
pub const ALTERNATING_MAX_N: u64 = 40;

const KERNEL_LEVEL_MAX: u32 = 12;
const KERNEL_TOL: Tolerance = Tolerance { abs: 1e-15, rel: 1e-13 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Series,
    ClosedForm,
    IntegralSingle,
    IntegralDouble,
    IntegralPrelim,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Series => "series",
            Route::ClosedForm => "closed_form",
            Route::IntegralSingle => "integral_single",
            Route::IntegralDouble => "integral_double",
            Route::IntegralPrelim => "integral_prelim",
        }
    }
}

/// A computed value with its error estimate.
///
/// `terms_used` counts series terms or quadrature nodes depending on the route.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub value: f64,
    pub err_est: f64,
    pub terms_used: u64,
    pub route: Route,
}

/// Evaluation point. `s` is ignored by the product routes; `d`, when set, is
/// the integer value of `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalParams {
    pub alpha: f64,
    pub u: f64,
    pub s: f64,
    pub d: Option<u32>,
}

impl EvalParams {
    pub fn real(alpha: f64, u: f64) -> Self {
        EvalParams { alpha, u, s: 1.0, d: None }
    }

    pub fn integer(d: u32, u: f64) -> Self {
        EvalParams {
            alpha: d as f64,
            u,
            s: 1.0,
            d: Some(d),
        }
    }

    pub fn with_s(mut self, s: f64) -> Self {
        self.s = s;
        self
    }

    fn check_common(&self) -> Result<()> {
        if !(self.u.is_finite() && self.u > 0.0) {
            return Err(domain(format!("u must be positive and finite, got {}", self.u)));
        }
        if !self.alpha.is_finite() || !self.s.is_finite() {
            return Err(domain("alpha and s must be finite"));
        }
        if let Some(d) = self.d {
            if d as f64 != self.alpha {
                return Err(domain(format!("d = {d} disagrees with alpha = {}", self.alpha)));
            }
        }
        Ok(())
    }

    /// Validity for the product `z_alpha(u)`: alpha is not -2, -3, ...
    pub fn check_product(&self) -> Result<()> {
        self.check_common()?;
        if is_integer_at_most(self.alpha, -2.0) {
            return Err(domain(format!("alpha = {} makes a weight 1/(n+alpha+1) infinite", self.alpha)));
        }
        Ok(())
    }

    /// Validity for `S_alpha(s, u)`: alpha is not -1, -2, ...
    pub fn check_double_sum(&self) -> Result<()> {
        self.check_common()?;
        if is_integer_at_most(self.alpha, -1.0) {
            return Err(domain(format!("alpha = {} makes a weight 1/(n+alpha+1) infinite", self.alpha)));
        }
        Ok(())
    }
}

fn is_integer_at_most(x: f64, bound: f64) -> bool {
    x <= bound && x.fract() == 0.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DifferenceMethod {
    AlternatingSum,
    FrullaniQuadrature,
}

fn check_u(u: f64) -> Result<()> {
    if u.is_finite() && u > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("u must be positive and finite, got {u}")))
    }
}

/// `ln(1 - e^{-t})` without cancellation at either end.
pub(crate) fn ln_one_minus_exp(t: f64) -> f64 {
    if t < LN_2 {
        (-(-t).exp_m1()).ln()
    } else {
        (-(-t).exp()).ln_1p()
    }
}

fn binomial_row_f64(n: u64) -> impl Iterator<Item = (u64, f64)> {
    // exact for n <= ALTERNATING_MAX_N: every intermediate stays below 2^53
    (0..=n).scan(1.0f64, move |c, k| {
        let out = (k, *c);
        *c = *c * (n - k) as f64 / (k + 1) as f64;
        Some(out)
    })
}

fn alternating_log_tn(n: u64, u: f64) -> f64 {
    if n == 0 {
        return -u.ln();
    }
    // subtracting log(n/2 + u) from every term changes nothing (the signed
    // binomials sum to zero) but shrinks the terms where C(n,k) is largest
    let centre = n as f64 / 2.0 + u;
    let acc: CompensatedSum = binomial_row_f64(n)
        .map(|(k, c)| {
            let term = c * ((k as f64 - n as f64 / 2.0) / centre).ln_1p();
            if k % 2 == 1 {
                term
            } else {
                -term
            }
        })
        .collect();
    acc.value()
}

/// `sum_k (-1)^k C(n,k) (k+u)^e` summed literally.
fn alternating_power_sum(n: u64, u: f64, e: f64) -> f64 {
    let acc: CompensatedSum = binomial_row_f64(n)
        .map(|(k, c)| {
            let term = c * (k as f64 + u).powf(e);
            if k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .collect();
    acc.value()
}

pub fn log_tn(n: u64, u: f64, method: DifferenceMethod) -> Result<f64> {
    check_u(u)?;
    match method {
        DifferenceMethod::AlternatingSum => {
            if n > ALTERNATING_MAX_N {
                return Err(domain(format!(
                    "alternating sum limited to n <= {ALTERNATING_MAX_N}, got n = {n}"
                )));
            }
            Ok(alternating_log_tn(n, u))
        }
        DifferenceMethod::FrullaniQuadrature => {
            if n == 0 {
                return Ok(-u.ln());
            }
            let e = integrate(Domain::HalfLine { lo: 0.0 }, KERNEL_LEVEL_MAX, KERNEL_TOL, |node| {
                let t = node.x;
                (n as f64 * ln_one_minus_exp(t) - u * t).exp() / t
            })?;
            Ok(e.value)
        }
    }
}

/// Inner sums `sum_k (-1)^k C(n,k) (k+u)^{1-s}` for `n = 0..=n_max` with a
/// quadrature error estimate.
fn inner_sums(n_max: u64, u: f64, s: f64, method: DifferenceMethod) -> Result<(Vec<f64>, f64)> {
    let e = 1.0 - s;
    if method == DifferenceMethod::AlternatingSum {
        if n_max > ALTERNATING_MAX_N {
            return Err(domain(format!(
                "alternating sum limited to n <= {ALTERNATING_MAX_N}, got N = {n_max}"
            )));
        }
        let v = (0..=n_max).map(|n| alternating_power_sum(n, u, e)).collect();
        return Ok((v, 0.0));
    }
    // the integral needs n > 1 - s; smaller n are summed literally
    let first_integral = if s > 1.0 {
        0
    } else {
        let f = (1.0 - s).floor() as u64 + 1;
        if f > ALTERNATING_MAX_N + 1 {
            return Err(domain(format!("s = {s} is too negative for the integral representation")));
        }
        f
    };
    let mut out: Vec<f64> = (0..first_integral.min(n_max + 1))
        .map(|n| alternating_power_sum(n, u, e))
        .collect();
    if first_integral > n_max {
        return Ok((out, 0.0));
    }
    let scale = recip_gamma(s - 1.0);
    let count = (n_max + 1 - first_integral) as usize;
    if scale == 0.0 {
        // s - 1 is a nonpositive integer: the remaining sums vanish exactly
        out.extend(std::iter::repeat(0.0).take(count));
        return Ok((out, 0.0));
    }
    let est = integrate_vec(Domain::HalfLine { lo: 0.0 }, count, KERNEL_LEVEL_MAX, KERNEL_TOL, |node, buf| {
        let t = node.x;
        let lp = ln_one_minus_exp(t);
        let base = (first_integral as f64 * lp - u * t + (s - 2.0) * t.ln()).exp();
        let p = lp.exp();
        let mut w = base;
        for b in buf.iter_mut() {
            if w == 0.0 {
                break;
            }
            *b = w;
            w *= p;
        }
    })?;
    let err = est.err.iter().sum::<f64>() * scale.abs();
    out.extend(est.values.iter().map(|v| v * scale));
    Ok((out, err))
}

/// `max |v_n| n^u` over the last decade `n in [N/10, N]`.
fn fit_decay(values: &[f64], u: f64, offset: usize) -> f64 {
    let n_max = offset + values.len() - 1;
    let start = (n_max / 10).max(1).max(offset);
    (start..=n_max)
        .map(|n| values[n - offset].abs() * (n as f64).powf(u))
        .fold(0.0, f64::max)
}

/// Partial sum of `S_alpha(s, u)` over `n = 0..=N`.
pub fn s_alpha_truncated(p: &EvalParams, n_terms: u64, method: DifferenceMethod) -> Result<Approximation> {
    p.check_double_sum()?;
    let (inner, qerr) = inner_sums(n_terms, p.u, p.s, method)?;
    let c = p.alpha + 1.0;
    let acc: CompensatedSum = inner.iter().enumerate().map(|(n, v)| v / (n as f64 + c)).collect();
    let tail = fit_decay(&inner, p.u, 0) * (n_terms as f64).powf(-p.u) / p.u;
    Ok(Approximation {
        value: acc.value(),
        err_est: tail + qerr + 4.0 * f64::EPSILON * acc.magnitude(),
        terms_used: n_terms + 1,
        route: Route::Series,
    })
}

/// Result of [`log_z_direct`]: the plain partial sum and a tail-corrected
/// value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSum {
    pub raw: Approximation,
    pub extrapolated: Approximation,
}

/// `e^x E_1(x)` for `x > 0`.
fn scaled_exp_integral(x: f64) -> f64 {
    if x <= 1.0 {
        let mut term = 1.0;
        let mut acc = 0.0;
        for k in 1..60 {
            term *= -x / k as f64;
            acc += term / k as f64;
            if term.abs() < 1e-18 {
                break;
            }
        }
        x.exp() * (-euler_gamma() - x.ln() - acc)
    } else {
        // modified Lentz on E_1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200 {
            let a = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let delta = c * d;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        h
    }
}

/// `sum_{n > N} p^n / (n + c)` with `p = e^{-l}`, by Euler-Maclaurin in `n`.
fn weighted_geometric_tail(l: f64, n: f64, c: f64) -> f64 {
    if l > 0.01 {
        // Euler-Maclaurin loses accuracy like (l / 2 pi)^7; sum directly instead
        let ratio = (-l).exp();
        let mut term = (-(n + 1.0) * l).exp();
        let mut acc = 0.0;
        let mut k = n + 1.0;
        while term > 1e-17 * acc && term > f64::MIN_POSITIVE {
            acc += term / (k + c);
            term *= ratio;
            k += 1.0;
        }
        return acc;
    }
    // the remainder after the fifth derivative scales like
    // ((l + 1/(n+c)) / 2 pi)^7, so the expansion starts at n + c >= 64
    let start = n.max((64.0 - c).ceil());
    let mut head = 0.0;
    let mut k = n + 1.0;
    while k <= start {
        head += (-k * l).exp() / (k + c);
        k += 1.0;
    }
    head + euler_maclaurin_tail(l, start, c)
}

fn euler_maclaurin_tail(l: f64, n: f64, c: f64) -> f64 {
    let x = (n + c) * l;
    let h = 1.0 / (n + c);
    // j-th derivative of 1/(x + c) at N is (-1)^j j! h^{j+1}
    let deriv = |m: i32| -> f64 {
        let mut acc = 0.0;
        let mut binom = 1.0;
        let mut fact = 1.0;
        for j in 0..=m {
            if j > 0 {
                binom = binom * (m - j + 1) as f64 / j as f64;
                fact *= j as f64;
            }
            let sign = if (m - j) % 2 == 0 { 1.0 } else { -1.0 } * if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * binom * l.powi(m - j) * fact * h.powi(j + 1);
        }
        acc
    };
    let integral = if x > 1.0 {
        scaled_exp_integral(x) * (c * l - x).exp()
    } else {
        (c * l).exp() * scaled_exp_integral(x) * (-x).exp()
    };
    let pn = (-n * l).exp();
    integral - pn * (h / 2.0 + deriv(1) / 12.0 - deriv(3) / 720.0 + deriv(5) / 30240.0)
}

/// Partial sum `sum_{n=1}^N log t_n(u) / (n + alpha + 1)` for `log z_alpha(u)`.
///
/// The tail bound of the raw value follows the fitted decay `C n^{-u-1}` of
/// the terms. In quadrature mode the extrapolated value adds the tail summed
/// under the integral; the alternating mode can only use one Richardson step
/// against `N/2`.
pub fn log_z_direct(p: &EvalParams, n_terms: u64, method: DifferenceMethod) -> Result<DirectSum> {
    p.check_product()?;
    if n_terms == 0 {
        return Err(domain("need at least one term"));
    }
    let c = p.alpha + 1.0;
    let u = p.u;
    let n = n_terms as usize;
    let (logs, qerr, tail) = match method {
        DifferenceMethod::AlternatingSum => {
            let logs = (1..=n_terms)
                .map(|k| log_tn(k, u, method))
                .collect::<Result<Vec<_>>>()?;
            (logs, 0.0, None)
        }
        DifferenceMethod::FrullaniQuadrature => {
            let est = integrate_vec(Domain::HalfLine { lo: 0.0 }, n + 1, KERNEL_LEVEL_MAX, KERNEL_TOL, |node, buf| {
                let t = node.x;
                let lp = ln_one_minus_exp(t);
                let kern = (-u * t).exp() / t;
                buf[n] = kern * weighted_geometric_tail(-lp, n_terms as f64, c);
                let p = lp.exp();
                let mut w = kern * p;
                for b in buf[..n].iter_mut() {
                    if w == 0.0 {
                        break;
                    }
                    *b = w;
                    w *= p;
                }
            })?;
            let weighted: f64 = est.err[..n].iter().enumerate().map(|(i, e)| e / (i as f64 + 1.0 + c)).sum();
            (est.values[..n].to_vec(), weighted, Some((est.values[n], est.err[n])))
        }
    };
    let acc: CompensatedSum = logs.iter().enumerate().map(|(i, v)| v / (i as f64 + 1.0 + c)).collect();
    let raw_value = acc.value();
    let round = 4.0 * f64::EPSILON * acc.magnitude();
    let decay = fit_decay(&logs, u, 1) * (n_terms as f64).powf(-u) / u;
    let raw = Approximation {
        value: raw_value,
        err_est: decay + qerr + round,
        terms_used: n_terms,
        route: Route::Series,
    };
    let extrapolated = match tail {
        Some((t, terr)) => Approximation {
            value: raw_value + t,
            err_est: qerr + terr + round,
            terms_used: n_terms,
            route: Route::Series,
        },
        None => {
            let half = n / 2;
            if half == 0 {
                raw
            } else {
                let s_half: f64 = logs[..half].iter().enumerate().map(|(i, v)| v / (i as f64 + 1.0 + c)).sum();
                let f = 2f64.powf(u);
                let value = (f * raw_value - s_half) / (f - 1.0);
                Approximation {
                    value,
                    err_est: (value - raw_value).abs() + round,
                    terms_used: n_terms,
                    route: Route::Series,
                }
            }
        }
    };
    Ok(DirectSum { raw, extrapolated })
}

/// `sum_{n<=N} sum_k (-1)^k C(n,k) (k+u+1)^{1-s}`, which tends to `u^{1-s}`.
pub fn lemma_log2_partial(s: f64, u: f64, n_terms: u64) -> Result<f64> {
    check_u(u)?;
    let (inner, _) = inner_sums(n_terms, u + 1.0, s, DifferenceMethod::FrullaniQuadrature)?;
    let acc: CompensatedSum = inner.into_iter().collect();
    Ok(acc.value())
}

/// The omitted part `sum_{n>N}` of [`lemma_log2_partial`], summed under the
/// integral as `int_0^inf (1-e^{-t})^{N+1} e^{-ut} t^{s-2} dt / Gamma(s-1)`.
/// Needs `s > 1`.
pub fn lemma_log2_tail(s: f64, u: f64, n_terms: u64) -> Result<f64> {
    check_u(u)?;
    if s <= 1.0 {
        return Err(domain("the tail integral needs s > 1"));
    }
    let m = (n_terms + 1) as f64;
    let e = integrate(Domain::HalfLine { lo: 0.0 }, KERNEL_LEVEL_MAX, KERNEL_TOL, |node| {
        let t = node.x;
        (m * ln_one_minus_exp(t) - u * t + (s - 2.0) * t.ln()).exp()
    })?;
    Ok(e.value * recip_gamma(s - 1.0))
}

/// `alpha S_alpha(s,u) - S_{alpha-1}(s-1,u) - (alpha-u) S_{alpha-1}(s,u)` with
/// `S_alpha` summed over `n <= N` and `S_{alpha-1}` over `n <= N+1`, matching
/// the index shift that relates the two.
pub fn functional_eq_residual(p: &EvalParams, n_terms: u64) -> Result<f64> {
    p.check_double_sum()?;
    if p.alpha <= 0.0 && p.alpha.fract() == 0.0 {
        return Err(domain(format!("alpha = {} must not be 0, -1, -2, ...", p.alpha)));
    }
    let method = DifferenceMethod::FrullaniQuadrature;
    let lower = EvalParams::real(p.alpha - 1.0, p.u);
    let a = s_alpha_truncated(&p.with_s(p.s), n_terms, method)?.value;
    let b = s_alpha_truncated(&lower.with_s(p.s - 1.0), n_terms + 1, method)?.value;
    let c = s_alpha_truncated(&lower.with_s(p.s), n_terms + 1, method)?.value;
    Ok(p.alpha * a - b - (p.alpha - p.u) * c)
}
