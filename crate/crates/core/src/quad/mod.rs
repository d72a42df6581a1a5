//! Integral representations of `log z_{alpha-1}(u)` over the unit interval
//! and the unit square, evaluated by tanh-sinh quadrature.
//!
//! Every integrand is written in terms of the node's distances to both ends
//! of the interval, so `1 - x`, `log x` and `1 - pq` never lose digits near
//! the endpoints.

pub mod engine;

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::series::{Approximation, EvalParams, Route};
use engine::{integrate, integrate_deep, Domain, Node, Tolerance};

pub const MAX_LEVEL: u32 = 14;
pub const MIN_ABS_TOL: f64 = 1e-14;

const UNIT: Domain = Domain::Finite { lo: 0.0, hi: 1.0 };

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadConfig {
    /// Number of step halvings allowed.
    pub level_max: u32,
    pub abs_tol: f64,
    /// Distance from a singular endpoint below which integrands switch to
    /// their series form.
    pub edge_guard: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            level_max: 12,
            abs_tol: 1e-12,
            edge_guard: 0.08,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if self.level_max == 0 || self.level_max > MAX_LEVEL {
            return Err(Error::Config(format!("level_max must be in 1..={MAX_LEVEL}, got {}", self.level_max)));
        }
        if !(self.abs_tol >= MIN_ABS_TOL && self.abs_tol.is_finite()) {
            return Err(Error::Config(format!("abs_tol must be at least {MIN_ABS_TOL:e}, got {}", self.abs_tol)));
        }
        if !(self.edge_guard > 0.0 && self.edge_guard < 0.1) {
            return Err(Error::Config(format!("edge_guard must lie in (0, 0.1), got {}", self.edge_guard)));
        }
        Ok(())
    }

    fn tolerance(&self) -> Tolerance {
        Tolerance::abs(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegrandKind {
    SingleD,
    DoubleAlpha,
    PrelimAlpha,
    ElementaryHalf,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandSpec {
    kind: IntegrandKind,
    params: EvalParams,
}

impl IntegrandSpec {
    pub fn new(kind: IntegrandKind, params: EvalParams) -> Result<Self> {
        let p = params;
        if !(p.u.is_finite() && p.u > 0.0) {
            return Err(domain(format!("u must be positive and finite, got {}", p.u)));
        }
        match kind {
            IntegrandKind::SingleD => {
                if p.d.is_none() {
                    return Err(domain("the single integral needs an integer d >= 0"));
                }
                p.check_product()?;
            }
            IntegrandKind::DoubleAlpha | IntegrandKind::PrelimAlpha => {
                if !(p.alpha.is_finite() && p.alpha > -1.0) {
                    return Err(domain(format!("alpha must exceed -1, got {}", p.alpha)));
                }
            }
            IntegrandKind::ElementaryHalf => {
                if p.alpha != 0.5 || p.u != 1.0 {
                    return Err(domain("the elementary integral is fixed at alpha = 1/2, u = 1"));
                }
            }
        }
        Ok(IntegrandSpec { kind, params })
    }

    pub fn kind(&self) -> IntegrandKind {
        self.kind
    }

    pub fn params(&self) -> &EvalParams {
        &self.params
    }

    pub fn integrate(&self, cfg: &QuadConfig) -> Result<Approximation> {
        cfg.validate()?;
        let p = &self.params;
        match self.kind {
            IntegrandKind::SingleD => single_d(p.d.unwrap_or(0), p.u, cfg),
            IntegrandKind::DoubleAlpha => double_alpha(p.alpha, p.u, cfg),
            IntegrandKind::PrelimAlpha => prelim_alpha(p.alpha, p.u, cfg, Route::IntegralPrelim),
            IntegrandKind::ElementaryHalf => elementary_half(cfg),
        }
    }
}

/// `log z_{d-1}(u)` from the single integral with integer exponent `d`.
pub fn integrate_single_d(d: u32, u: f64, cfg: &QuadConfig) -> Result<Approximation> {
    IntegrandSpec::new(IntegrandKind::SingleD, EvalParams::integer(d, u))?.integrate(cfg)
}

/// `log z_{alpha-1}(u)` from the double integral over the unit square.
pub fn integrate_double(alpha: f64, u: f64, cfg: &QuadConfig) -> Result<Approximation> {
    IntegrandSpec::new(IntegrandKind::DoubleAlpha, EvalParams::real(alpha, u))?.integrate(cfg)
}

/// `log z_{alpha-1}(u)` from the single integral with the inner series in `n`
/// kept as a function of `1 - x`.
pub fn integrate_prelim(alpha: f64, u: f64, cfg: &QuadConfig) -> Result<Approximation> {
    IntegrandSpec::new(IntegrandKind::PrelimAlpha, EvalParams::real(alpha, u))?.integrate(cfg)
}

/// `int_0^1 (1 - artanh(sqrt(1-x)) / sqrt(1-x)) / log x dx`, the logarithm of
/// `prod_n t_n(1)^{1/(2n+1)}`; it is half of `integrate_prelim(1/2, 1)`.
pub fn integrate_elementary_half(cfg: &QuadConfig) -> Result<Approximation> {
    IntegrandSpec::new(IntegrandKind::ElementaryHalf, EvalParams::real(0.5, 1.0))?.integrate(cfg)
}

/// `log x` from whichever distance is small.
fn ln_node(x: f64, from_hi: f64) -> f64 {
    if x < 0.5 {
        x.ln()
    } else {
        (-from_hi).ln_1p()
    }
}

/// `(1-x)^{-d} + (1/log x) sum_{m=1}^d 1/(m (1-x)^{d-m})`.
fn single_bracket(d: u32, x: f64, y: f64, guard: f64) -> f64 {
    if d == 0 {
        return 1.0;
    }
    let lnx = ln_node(x, y);
    if y < guard {
        // equals (-y / log x) sum_{j>=0} y^j / (j + d + 1)
        let mut acc = 0.0f64;
        let mut pow = 1.0;
        let mut j = 0;
        while pow > 1e-18 * acc.max(1e-300) || j == 0 {
            acc += pow / (j + d + 1) as f64;
            pow *= y;
            j += 1;
        }
        return -y / lnx * acc;
    }
    let mut inner = 0.0;
    for m in 1..=d {
        inner += y.powi(m as i32 - d as i32) / m as f64;
    }
    y.powi(-(d as i32)) + inner / lnx
}

fn single_d(d: u32, u: f64, cfg: &QuadConfig) -> Result<Approximation> {
    let e = integrate(UNIT, cfg.level_max, cfg.tolerance(), |n: &Node| {
        let x = n.from_lo;
        let lnx = ln_node(x, n.from_hi);
        ((u - 1.0) * lnx).exp() * single_bracket(d, x, n.from_hi, cfg.edge_guard)
    })?;
    Ok(Approximation {
        value: e.value,
        err_est: e.err,
        terms_used: e.nodes as u64,
        route: Route::IntegralSingle,
    })
}

/// Runs an inner quadrature inside an outer integrand, parking the first
/// failure so the outer loop can report it.
struct Nested {
    nodes: Cell<usize>,
    err: Cell<f64>,
    failure: Cell<Option<Error>>,
}

impl Nested {
    fn new() -> Self {
        Nested {
            nodes: Cell::new(0),
            err: Cell::new(0.0),
            failure: Cell::new(None),
        }
    }

    fn run<F: FnMut(&Node) -> f64>(&self, domain: Domain, cfg: &QuadConfig, f: F) -> f64 {
        match integrate_deep(domain, cfg.level_max, Tolerance::abs(cfg.abs_tol / 10.0), f) {
            Ok(e) => {
                self.nodes.set(self.nodes.get() + e.nodes);
                self.err.set(self.err.get().max(e.err));
                e.value
            }
            Err(err) => {
                let prev = self.failure.take();
                self.failure.set(prev.or(Some(err)));
                0.0
            }
        }
    }

    fn finish(self, outer: Result<engine::Estimate>, route: Route) -> Result<Approximation> {
        if let Some(err) = self.failure.take() {
            return Err(err);
        }
        let e = outer?;
        Ok(Approximation {
            value: e.value,
            err_est: e.err + self.err.get(),
            terms_used: (e.nodes + self.nodes.get()) as u64,
            route,
        })
    }
}

fn double_alpha(alpha: f64, u: f64, cfg: &QuadConfig) -> Result<Approximation> {
    let nested = Nested::new();
    let outer = integrate(UNIT, cfg.level_max, cfg.tolerance(), |qn: &Node| {
        let q = qn.from_lo;
        let one_minus_q = qn.from_hi;
        let ln_q = ln_node(q, one_minus_q);
        nested.run(UNIT, cfg, |pn: &Node| {
            let p = pn.from_lo;
            let one_minus_p = pn.from_hi;
            let ln_pq = ln_node(p, one_minus_p) + ln_q;
            // 1 - pq assembled from the two distances keeps the ridge pq -> 1 exact
            let one_minus_pq = one_minus_p + p * one_minus_q;
            let ratio = if alpha == 0.0 { 1.0 } else { (one_minus_p / one_minus_pq).powf(alpha) };
            -ratio * ((u - 1.0) * ln_pq).exp() / ln_pq
        })
    });
    nested.finish(outer, Route::IntegralDouble)
}

fn prelim_alpha(alpha: f64, u: f64, cfg: &QuadConfig, route: Route) -> Result<Approximation> {
    let nested = Nested::new();
    let outer = integrate(UNIT, cfg.level_max, cfg.tolerance(), |n: &Node| {
        let x = n.from_lo;
        let w = n.from_hi;
        let lnx = ln_node(x, w);
        // g = sum_{n>=1} w^{n-1} / (n + alpha)
        let g = if w <= 0.5 {
            let mut acc = 0.0f64;
            let mut pow = 1.0;
            let mut k = 1.0;
            while pow > 1e-18 * acc || k == 1.0 {
                acc += pow / (k + alpha);
                pow *= w;
                k += 1.0;
            }
            acc
        } else {
            // sum_{n>=1} w^{n+alpha} / (n+alpha) = int_0^w y^alpha / (1-y) dy
            // = -log(1-w) + int_0^w (y^alpha - 1) / (1-y) dy
            let j = nested.run(Domain::Finite { lo: 0.0, hi: w }, cfg, |yn: &Node| {
                let y = yn.from_lo;
                let one_minus_y = x + yn.from_hi;
                if alpha == 0.0 {
                    return 0.0;
                }
                (alpha * ln_node(y, one_minus_y)).exp_m1() / one_minus_y
            });
            (-lnx + j) * (-(1.0 + alpha) * w.ln()).exp()
        };
        ((u - 1.0) * lnx).exp() * (-w / lnx) * g
    });
    nested.finish(outer, route)
}

fn elementary_half(cfg: &QuadConfig) -> Result<Approximation> {
    let e = integrate(UNIT, cfg.level_max, cfg.tolerance(), |n: &Node| {
        let x = n.from_lo;
        let w = n.from_hi;
        let lnx = ln_node(x, w);
        // 1 - artanh(r)/r = -sum_{j>=1} w^j / (2j+1) with r = sqrt(w)
        let bracket = if w < cfg.edge_guard {
            let mut acc = 0.0f64;
            let mut pow = w;
            let mut j = 1.0;
            while pow > 1e-18 * acc.abs() || j == 1.0 {
                acc -= pow / (2.0 * j + 1.0);
                pow *= w;
                j += 1.0;
            }
            acc
        } else {
            let r = w.sqrt();
            let one_minus_r = x / (1.0 + r);
            let artanh = 0.5 * (r.ln_1p() - one_minus_r.ln());
            1.0 - artanh / r
        };
        bracket / lnx
    })?;
    Ok(Approximation {
        value: e.value,
        err_est: e.err,
        terms_used: e.nodes as u64,
        route: Route::IntegralPrelim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{euler_gamma, glaisher_kinkelin};
    use std::f64::consts::PI;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn config_bounds() {
        assert!(cfg().validate().is_ok());
        let bad = [
            QuadConfig { level_max: 15, ..cfg() },
            QuadConfig { level_max: 0, ..cfg() },
            QuadConfig { abs_tol: 1e-15, ..cfg() },
            QuadConfig { edge_guard: 0.1, ..cfg() },
            QuadConfig { edge_guard: 0.0, ..cfg() },
        ];
        for c in bad {
            assert!(matches!(integrate_single_d(1, 1.0, &c), Err(Error::Config(_))), "{c:?}");
        }
    }

    #[test]
    fn spec_validation() {
        assert!(IntegrandSpec::new(IntegrandKind::SingleD, EvalParams::real(1.5, 1.0)).is_err());
        assert!(IntegrandSpec::new(IntegrandKind::DoubleAlpha, EvalParams::real(-1.0, 1.0)).is_err());
        assert!(IntegrandSpec::new(IntegrandKind::PrelimAlpha, EvalParams::real(-0.5, 0.0)).is_err());
        assert!(IntegrandSpec::new(IntegrandKind::ElementaryHalf, EvalParams::real(0.5, 2.0)).is_err());
        assert!(IntegrandSpec::new(IntegrandKind::DoubleAlpha, EvalParams::real(-0.5, 1.0)).is_ok());
    }

    #[test]
    fn bracket_series_matches_naive_form() {
        for d in 1..=5 {
            for y in [0.05, 0.07] {
                let x = 1.0 - y;
                let series = single_bracket(d, x, y, 0.09);
                let naive = single_bracket(d, x, y, 0.01);
                assert!((series - naive).abs() < 1e-8 * series.abs(), "d={d} y={y}");
            }
        }
        // finite limit at x = 1
        assert!((single_bracket(1, 1.0, 1e-300, 0.08) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn single_integral_examples() {
        for u in [0.5, 1.0, 2.0, 1.0 / 3.0] {
            let a = integrate_single_d(0, u, &cfg()).unwrap();
            assert!((a.value - 1.0 / u).abs() < 1e-12, "u={u}: {a:?}");
        }
        let a = integrate_single_d(1, 1.0, &cfg()).unwrap();
        assert!((a.value - euler_gamma()).abs() < 1e-12);
        let a = integrate_single_d(3, 1.0, &cfg()).unwrap();
        let target = -3.0 / 8.0 + 0.25 * (2.0 * PI).ln() + glaisher_kinkelin().ln();
        assert!((a.value - target).abs() < 1e-12, "{a:?}");
    }

    #[test]
    fn double_integral_examples() {
        let a = integrate_double(0.0, 2.0, &cfg()).unwrap();
        assert!((a.value - 0.5).abs() < 1e-10, "{a:?}");
        let a = integrate_double(1.0, 1.0, &cfg()).unwrap();
        assert!((a.value - euler_gamma()).abs() < 1e-10, "{a:?}");
        let a = integrate_double(2.0, 1.0, &cfg()).unwrap();
        assert!((a.value - (0.5 * (2.0 * PI).ln() - 0.5)).abs() < 1e-10, "{a:?}");
    }

    #[test]
    fn prelim_examples() {
        let a = integrate_prelim(0.0, 1.0, &cfg()).unwrap();
        assert!((a.value - 1.0).abs() < 1e-11, "{a:?}");
        let p = integrate_prelim(0.5, 1.0, &cfg()).unwrap();
        let d = integrate_double(0.5, 1.0, &cfg()).unwrap();
        assert!((p.value - d.value).abs() < 1e-9, "{p:?} {d:?}");
        let a = integrate_prelim(2.0, 1.0, &cfg()).unwrap();
        assert!((a.value - (0.5 * (2.0 * PI).ln() - 0.5)).abs() < 1e-11, "{a:?}");
    }

    #[test]
    fn elementary_is_half_of_prelim() {
        let e = integrate_elementary_half(&cfg()).unwrap();
        let p = integrate_prelim(0.5, 1.0, &cfg()).unwrap();
        assert!(e.value > 0.0);
        assert!((2.0 * e.value - p.value).abs() < 1e-10, "{e:?} {p:?}");
    }

    #[test]
    fn refinement_stays_within_error_estimate() {
        let base = cfg();
        let finer = QuadConfig { level_max: base.level_max + 1, ..base };
        for d in 0..4 {
            let a = integrate_single_d(d, 0.5, &base).unwrap();
            let b = integrate_single_d(d, 0.5, &finer).unwrap();
            assert!((a.value - b.value).abs() <= a.err_est.max(f64::EPSILON), "d={d}");
        }
    }
}
