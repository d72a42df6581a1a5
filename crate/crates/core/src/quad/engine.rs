//! Double-exponential quadrature.
//!
//! Tanh-sinh on finite intervals and exp-sinh on `[lo, inf)`. Step halving
//! reuses every previous node; each level adds only the odd multiples of the
//! new step. Integrands receive the abscissa together with its distances to
//! both ends so endpoint singularities can be evaluated without cancellation.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Abscissa with its distances from the lower and upper end of the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub from_lo: f64,
    pub from_hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite { lo: f64, hi: f64 },
    HalfLine { lo: f64 },
}

impl Domain {
    fn tau_max(&self) -> f64 {
        match self {
            Domain::Finite { .. } => 4.5,
            Domain::HalfLine { .. } => 5.5,
        }
    }

    /// Node and Jacobian `dx/dtau` at `tau`, or `None` where the map
    /// underflows to an endpoint.
    fn node(&self, tau: f64) -> Option<(Node, f64)> {
        let s = FRAC_PI_2 * tau.sinh();
        let dsdtau = FRAC_PI_2 * tau.cosh();
        match *self {
            Domain::Finite { lo, hi } => {
                let half = 0.5 * (hi - lo);
                let q = (-2.0 * s.abs()).exp();
                let near = half * 2.0 * q / (1.0 + q);
                let far = half * 2.0 / (1.0 + q);
                let (from_lo, from_hi) = if s >= 0.0 { (far, near) } else { (near, far) };
                if from_lo <= 0.0 || from_hi <= 0.0 {
                    return None;
                }
                let x = if from_lo <= half { lo + from_lo } else { hi - from_hi };
                let jac = half * dsdtau * 4.0 * q / ((1.0 + q) * (1.0 + q));
                (jac > 0.0).then_some((Node { x, from_lo, from_hi }, jac))
            }
            Domain::HalfLine { lo } => {
                let t = s.exp();
                if t <= 0.0 || !t.is_finite() {
                    return None;
                }
                let node = Node {
                    x: lo + t,
                    from_lo: t,
                    from_hi: f64::INFINITY,
                };
                Some((node, t * dsdtau))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn abs(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }

    pub fn rel(rel: f64) -> Self {
        Tolerance { abs: 0.0, rel }
    }
}

#[derive(Debug, Clone)]
pub struct VecEstimate {
    pub values: Vec<f64>,
    pub err: Vec<f64>,
    pub nodes: usize,
    pub level: u32,
}

#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub err: f64,
    pub nodes: usize,
    pub level: u32,
}

const MIN_LEVEL: u32 = 3;

/// Integrates `dim` functions at once; `f` writes their values at a node into
/// the buffer it is handed.
pub fn integrate_vec<F>(domain: Domain, dim: usize, level_max: u32, tol: Tolerance, f: F) -> Result<VecEstimate>
where
    F: FnMut(&Node, &mut [f64]),
{
    integrate_on(domain, domain.tau_max(), dim, level_max, tol, f)
}

fn integrate_on<F>(domain: Domain, tau_max: f64, dim: usize, level_max: u32, tol: Tolerance, mut f: F) -> Result<VecEstimate>
where
    F: FnMut(&Node, &mut [f64]),
{
    let mut sums = vec![0.0; dim];
    let mut mags = vec![0.0; dim];
    let mut buf = vec![0.0; dim];
    let mut prev: Option<Vec<f64>> = None;
    let mut nodes = 0usize;

    let mut visit = |tau: f64, sums: &mut [f64], mags: &mut [f64], nodes: &mut usize| {
        if let Some((node, jac)) = domain.node(tau) {
            buf.iter_mut().for_each(|b| *b = 0.0);
            f(&node, &mut buf);
            *nodes += 1;
            for j in 0..dim {
                let v = buf[j] * jac;
                if v.is_finite() {
                    sums[j] += v;
                    mags[j] += v.abs();
                }
            }
        }
    };

    for level in 0..=level_max {
        let h = 0.5f64.powi(level as i32);
        let kmax = (tau_max / h).ceil() as i64;
        if level == 0 {
            for k in -kmax..=kmax {
                visit(k as f64, &mut sums, &mut mags, &mut nodes);
            }
        } else {
            let mut k = -kmax + if kmax % 2 == 0 { 1 } else { 0 };
            while k <= kmax {
                visit(k as f64 * h, &mut sums, &mut mags, &mut nodes);
                k += 2;
            }
        }
        let est: Vec<f64> = sums.iter().map(|s| s * h).collect();
        if let Some(p) = &prev {
            let err: Vec<f64> = (0..dim)
                .map(|j| (est[j] - p[j]).abs().max(16.0 * f64::EPSILON * h * mags[j]))
                .collect();
            let done = level >= MIN_LEVEL
                && (0..dim).all(|j| {
                    let floor = tol.abs.max(tol.rel * est[j].abs()).max(64.0 * f64::EPSILON * h * mags[j]);
                    err[j] <= floor
                });
            if done {
                return Ok(VecEstimate {
                    values: est,
                    err,
                    nodes,
                    level,
                });
            }
            if level == level_max {
                let (worst, werr) = (0..dim)
                    .map(|j| (est[j], err[j]))
                    .fold((0.0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
                return Err(Error::NoConvergence {
                    estimate: worst,
                    err_est: werr,
                });
            }
        }
        prev = Some(est);
    }
    Err(Error::Config("level_max must be at least 1".into()))
}

pub fn integrate<F>(domain: Domain, level_max: u32, tol: Tolerance, mut f: F) -> Result<Estimate>
where
    F: FnMut(&Node) -> f64,
{
    let v = integrate_vec(domain, 1, level_max, tol, |node, out| out[0] = f(node))?;
    Ok(Estimate {
        value: v.values[0],
        err: v.err[0],
        nodes: v.nodes,
        level: v.level,
    })
}

/// Like [`integrate`] but with nodes reaching about `1e-120` from the ends of
/// a finite interval instead of `1e-60`. Inner integrals whose endpoint peak
/// sits as close to the end as an outer node need this.
pub fn integrate_deep<F>(domain: Domain, level_max: u32, tol: Tolerance, mut f: F) -> Result<Estimate>
where
    F: FnMut(&Node) -> f64,
{
    let v = integrate_on(domain, domain.tau_max() + 0.7, 1, level_max, tol, |node, out| out[0] = f(node))?;
    Ok(Estimate {
        value: v.values[0],
        err: v.err[0],
        nodes: v.nodes,
        level: v.level,
    })
}
