//! Hurwitz zeta and related special functions.
//!
//! `zeta(s, u)` and `d/ds zeta(s, u)` are evaluated by Euler-Maclaurin
//! summation; digamma and log-gamma use upward recurrence into the asymptotic
//! region followed by their Stirling-type series. The Bendersky constants
//! `log A_k` combine exact Bernoulli values with the zeta derivative.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::{self, bernoulli_number, harmonic, to_f64};
use crate::sum::CompensatedSum;

/// Largest number of Euler-Maclaurin correction terms accepted.
pub const MAX_CORRECTIONS: usize = 30;

/// Euler-Maclaurin tuning: `head` terms summed directly, then `corrections`
/// Bernoulli correction terms at `head + u`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EMConfig {
    pub head: usize,
    pub corrections: usize,
}

impl Default for EMConfig {
    fn default() -> Self {
        EMConfig {
            head: 40,
            corrections: 12,
        }
    }
}

impl EMConfig {
    pub fn new(head: usize, corrections: usize) -> Result<Self> {
        let cfg = EMConfig { head, corrections };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.head < 1 {
            return Err(Error::Config("Euler-Maclaurin head length must be >= 1".into()));
        }
        if !(1..=MAX_CORRECTIONS).contains(&self.corrections) {
            return Err(Error::Config(format!(
                "Euler-Maclaurin correction count must be in 1..={MAX_CORRECTIONS}"
            )));
        }
        Ok(())
    }

    /// Configuration suited to evaluating at order `s` with shift `u`.
    ///
    /// For `s >= 0` this is the default. For negative `s` the head sum grows
    /// like `(head + u)^(1 - s)` and cancels against the correction terms, so
    /// the expansion point is pulled in to `head + u ~ 5` (`~ 4` below
    /// `s = -5`) and the number of corrections is capped where the asymptotic
    /// terms stop decreasing.
    pub fn for_order(s: f64, u: f64) -> Self {
        if s >= 0.0 {
            return EMConfig::default();
        }
        let target = if s >= -5.0 { 5.0 } else { 4.0 };
        let head = ((target - u).ceil() as usize).max(1);
        let a = head as f64 + u;
        let limit = ((PI * a - s) / 2.0).floor() as usize;
        EMConfig {
            head,
            corrections: limit.clamp(1, MAX_CORRECTIONS),
        }
    }
}

/// A zeta value with optional s-derivative and error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaValue {
    pub value: f64,
    pub deriv: Option<f64>,
    pub err_est: f64,
}

// B_{2j} / (2j)! for j = 0..=MAX_CORRECTIONS + 1 (index 0 unused).
fn em_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut fact = exactnum::integer(1);
        let mut out = vec![0.0];
        for j in 1..=MAX_CORRECTIONS as i64 + 1 {
            fact = fact * exactnum::integer(2 * j - 1) * exactnum::integer(2 * j);
            out.push(to_f64(&(bernoulli_number(2 * j as u64) / &fact)));
        }
        out
    })
}

fn check_zeta_args(s: f64, u: f64, cfg: &EMConfig) -> Result<()> {
    cfg.validate()?;
    if !(u > 0.0) || !u.is_finite() {
        return Err(domain(format!("Hurwitz zeta needs u > 0, got u = {u}")));
    }
    if !s.is_finite() {
        return Err(domain(format!("s must be finite, got {s}")));
    }
    if s == 1.0 {
        return Err(Error::Pole("zeta(s, u) has a pole at s = 1".into()));
    }
    Ok(())
}

struct EulerMaclaurin {
    value: f64,
    deriv: f64,
    value_err: f64,
    deriv_err: f64,
}

fn euler_maclaurin(s: f64, u: f64, cfg: &EMConfig) -> EulerMaclaurin {
    let eps = f64::EPSILON;
    let mut val = CompensatedSum::new();
    let mut der = CompensatedSum::new();
    for k in 0..cfg.head {
        let x = k as f64 + u;
        let t = x.powf(-s);
        val.add(t);
        der.add(-x.ln() * t);
    }
    let a = cfg.head as f64 + u;
    let ln_a = a.ln();
    let a_pow = a.powf(-s);
    let sm1 = s - 1.0;

    let integral = a * a_pow / sm1;
    val.add(integral);
    der.add(-integral * (ln_a + 1.0 / sm1));
    val.add(0.5 * a_pow);
    der.add(-0.5 * ln_a * a_pow);

    let coeffs = em_coefficients();
    // poch = (s)_{2j-1}, dpoch its s-derivative, carried by the product rule so
    // zero factors at negative integer s need no special casing.
    let mut poch = s;
    let mut dpoch = 1.0;
    let mut power = a_pow / a; // a^{-s-1}
    let inv_a2 = 1.0 / (a * a);
    for j in 1..=cfg.corrections {
        let c = coeffs[j];
        val.add(c * poch * power);
        der.add(c * (dpoch - poch * ln_a) * power);
        let f1 = s + (2 * j - 1) as f64;
        let f2 = s + (2 * j) as f64;
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        power *= inv_a2;
    }
    let c = coeffs[cfg.corrections + 1];
    let value_trunc = (c * poch * power).abs();
    let deriv_trunc = (c * (dpoch - poch * ln_a) * power).abs();

    EulerMaclaurin {
        value: val.value(),
        deriv: der.value(),
        value_err: value_trunc + 4.0 * eps * val.magnitude(),
        deriv_err: deriv_trunc + 4.0 * eps * der.magnitude(),
    }
}

/// Hurwitz zeta `zeta(s, u)`.
pub fn hurwitz_zeta(s: f64, u: f64, cfg: &EMConfig) -> Result<ZetaValue> {
    check_zeta_args(s, u, cfg)?;
    let em = euler_maclaurin(s, u, cfg);
    Ok(ZetaValue {
        value: em.value,
        deriv: None,
        err_est: em.value_err,
    })
}

/// Hurwitz zeta together with its s-derivative; `err_est` covers the
/// derivative.
pub fn hurwitz_zeta_deriv(s: f64, u: f64, cfg: &EMConfig) -> Result<ZetaValue> {
    check_zeta_args(s, u, cfg)?;
    let em = euler_maclaurin(s, u, cfg);
    Ok(ZetaValue {
        value: em.value,
        deriv: Some(em.deriv),
        err_est: em.deriv_err,
    })
}

/// Exact `zeta(1 - m, u) = -B_m(u) / m` for `m >= 1`, evaluated in `f64`.
pub fn zeta_at_nonpositive_integer(m: u64, u: f64) -> f64 {
    assert!(m >= 1, "m must be positive");
    -exactnum::bernoulli_poly(m).eval_f64(u) / m as f64
}

const ASYMPTOTIC_START: f64 = 10.0;

fn check_positive(name: &str, u: f64) -> Result<()> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(domain(format!("{name} needs u > 0, got u = {u}")));
    }
    Ok(())
}

// B_{2j} as f64, j = 1..=8.
fn even_bernoulli() -> &'static [f64; 8] {
    static B: OnceLock<[f64; 8]> = OnceLock::new();
    B.get_or_init(|| std::array::from_fn(|i| to_f64(&bernoulli_number(2 * (i as u64 + 1)))))
}

/// Digamma `psi(u)`.
pub fn digamma(u: f64) -> Result<f64> {
    check_positive("digamma", u)?;
    let mut x = u;
    let mut shift = CompensatedSum::new();
    while x < ASYMPTOTIC_START {
        shift.add(-1.0 / x);
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    let mut p = inv2;
    for (j, b) in even_bernoulli().iter().enumerate() {
        series += b / (2 * (j + 1)) as f64 * p;
        p *= inv2;
    }
    shift.add(x.ln() - 0.5 / x - series);
    Ok(shift.value())
}

/// `log Gamma(u)` for `u > 0`.
pub fn log_gamma(u: f64) -> Result<f64> {
    check_positive("log_gamma", u)?;
    let mut x = u;
    let mut prod = 1.0;
    let mut log_prod = 0.0;
    while x < ASYMPTOTIC_START {
        prod *= x;
        if prod < 1e-280 {
            log_prod += prod.ln();
            prod = 1.0;
        }
        x += 1.0;
    }
    log_prod += prod.ln();
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for (j, b) in even_bernoulli().iter().enumerate() {
        let k = 2 * (j + 1);
        series += b / (k * (k - 1)) as f64 * p;
        p *= inv2;
    }
    let stirling = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series;
    Ok(stirling - log_prod)
}

/// `1 / Gamma(x)` for any real `x`, zero at the poles `0, -1, -2, ...`.
pub fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        return (-log_gamma(x).expect("positive argument")).exp();
    }
    if x == x.floor() {
        return 0.0;
    }
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    let g = log_gamma(1.0 - x).expect("positive argument").exp();
    (PI * x).sin() * g / PI
}

/// `log A_k = (-1)^k H_k zeta(-k) - zeta'(-k)`.
pub fn log_bendersky(k: u64, cfg: &EMConfig) -> Result<f64> {
    let s = -(k as f64);
    let z = hurwitz_zeta_deriv(s, 1.0, cfg)?;
    // zeta(-k) = (-1)^k B_{k+1} / (k+1)
    let mut zeta_exact = bernoulli_number(k + 1) / exactnum::integer(k as i64 + 1);
    if k % 2 == 1 {
        zeta_exact = -zeta_exact;
    }
    let mut rational = harmonic(k) * zeta_exact;
    if k % 2 == 1 {
        rational = -rational;
    }
    Ok(to_f64(&rational) - z.deriv.expect("derivative requested"))
}

/// Arithmetic-geometric mean.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(domain(format!("AGM needs positive arguments, got ({a}, {b})")));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..64 {
        if (a - b).abs() <= 2.0 * f64::EPSILON * a.max(b) {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(0.5 * (a + b))
}

/// Euler's constant, as `-psi(1)`.
pub fn euler_gamma() -> f64 {
    -digamma(1.0).expect("psi(1) is defined")
}

/// Glaisher-Kinkelin constant `A = exp(1/12 - zeta'(-1))`.
pub fn glaisher_kinkelin() -> f64 {
    log_bendersky(1, &EMConfig::for_order(-1.0, 1.0))
        .expect("valid configuration")
        .exp()
}

/// `Gamma(1/3)` through its AGM closed form.
pub fn gamma_one_third_agm() -> f64 {
    let m = agm(2.0, (2.0 + 3f64.sqrt()).sqrt()).expect("positive arguments");
    2f64.powf(7.0 / 9.0) * PI.powf(2.0 / 3.0) / (3f64.powf(1.0 / 12.0) * m.cbrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath, 40 digits
    const EULER: f64 = 0.577_215_664_901_532_860_6;
    const LOG_A: f64 = 0.248_754_477_033_784_262_5;
    const ZETA3: f64 = 1.202_056_903_159_594_285_4;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn zeta_examples() {
        let cfg = EMConfig::default();
        let z = hurwitz_zeta(0.0, 0.3, &cfg).unwrap();
        assert!(close(z.value, 0.2, 1e-13), "{z:?}");
        let z = hurwitz_zeta(-1.0, 1.0, &EMConfig::for_order(-1.0, 1.0)).unwrap();
        assert!(close(z.value, -1.0 / 12.0, 1e-13), "{z:?}");
        // direct summation of 1/n^2 up to 10^6 plus the integral tail bound
        let direct: CompensatedSum = (1..=1_000_000u64).rev().map(|n| 1.0 / (n as f64).powi(2)).collect();
        let oracle = direct.value() + 1.0 / 1_000_000.5;
        let z = hurwitz_zeta(2.0, 1.0, &cfg).unwrap();
        assert!(close(z.value, oracle, 1e-12), "{} vs {}", z.value, oracle);
        assert!(close(z.value, PI * PI / 6.0, 1e-14));
    }

    #[test]
    fn zeta_rejects_bad_input() {
        let cfg = EMConfig::default();
        assert!(matches!(hurwitz_zeta(1.0, 1.0, &cfg), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(2.0, 0.0, &cfg), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(2.0, -1.0, &cfg), Err(Error::Domain(_))));
        let bad = EMConfig { head: 0, corrections: 3 };
        assert!(matches!(hurwitz_zeta(2.0, 1.0, &bad), Err(Error::Config(_))));
        let bad = EMConfig { head: 10, corrections: 31 };
        assert!(matches!(hurwitz_zeta(2.0, 1.0, &bad), Err(Error::Config(_))));
        assert!(EMConfig::new(10, 0).is_err());
    }

    #[test]
    fn zeta_deriv_examples() {
        let cfg = EMConfig::default();
        let z = hurwitz_zeta_deriv(0.0, 1.0, &cfg).unwrap();
        assert!(close(z.deriv.unwrap(), -0.5 * (2.0 * PI).ln(), 1e-13), "{z:?}");
        let z = hurwitz_zeta_deriv(0.0, 0.5, &cfg).unwrap();
        assert!(close(z.deriv.unwrap(), -0.5 * 2f64.ln(), 1e-13), "{z:?}");
        let z = hurwitz_zeta_deriv(-1.0, 1.0, &EMConfig::for_order(-1.0, 1.0)).unwrap();
        assert!(close(z.deriv.unwrap(), 1.0 / 12.0 - LOG_A, 1e-13), "{z:?}");
        assert!(hurwitz_zeta(2.0, 1.0, &cfg).unwrap().deriv.is_none());
    }

    #[test]
    fn zeta_against_mpmath_grid() {
        // (s, u, zeta, zeta') from mpmath at 40 digits
        let table = [
            (2.0, 1.0, 1.644_934_066_848_226_436_5, -0.937_548_254_315_843_753_7),
            (0.5, 0.3, 0.011_152_780_309_969_856_09, -1.832_879_636_775_822_300_6),
            (-1.5, 2.0, -1.025_485_201_889_833_035_9, -0.076_309_255_320_550_886_62),
            (3.7, 0.25, 169.407_649_359_904_389_59, 233.970_492_920_466_833_28),
            (-3.0, 0.3, -0.002_691_666_666_666_666_200_4, -0.012_762_444_161_095_844_813),
            (0.5, 2.0, -2.460_354_508_809_586_812_9, -3.922_646_139_209_151_727_5),
            (-0.5, 1.0, -0.207_886_224_977_354_566_02, -0.360_854_339_599_947_607_35),
        ];
        for (s, u, zv, zd) in table {
            let cfg = EMConfig::for_order(s, u);
            let z = hurwitz_zeta_deriv(s, u, &cfg).unwrap();
            let scale = f64::abs(zv).max(1.0);
            assert!(close(z.value, zv, 1e-12 * scale), "zeta({s},{u}) = {} vs {zv}", z.value);
            let scale = f64::abs(zd).max(1.0);
            assert!(close(z.deriv.unwrap(), zd, 1e-12 * scale), "zeta'({s},{u}) = {:?} vs {zd}", z.deriv);
        }
    }

    #[test]
    fn zeta_deriv_negative_integers_against_mpmath() {
        // zeta'(1-k, u), k = 1..=8
        let rows: [(f64, [f64; 8]); 3] = [
            (
                1.0 / 3.0,
                [
                    0.066_482_113_723_094_327_41,
                    0.093_726_201_760_779_427_48,
                    0.003_286_455_868_045_991_936,
                    -0.012_265_968_426_782_694_76,
                    -0.002_665_476_552_278_823_181,
                    0.005_500_604_960_784_777_477,
                    0.003_074_818_826_852_700_566,
                    -0.005_257_925_781_651_486_633,
                ],
            ),
            (
                0.5,
                [
                    -0.346_573_590_279_972_654_7,
                    0.053_829_439_326_894_410_05,
                    0.022_836_342_793_794_953_09,
                    -0.003_984_225_999_969_237_137,
                    -0.007_484_823_234_626_835_263,
                    0.000_469_124_416_759_894_954_4,
                    0.005_807_575_406_898_500_928,
                    0.000_745_513_544_004_348_971_2,
                ],
            ),
            (
                3.0,
                [
                    -0.225_791_352_644_727_432_4,
                    1.220_873_217_419_439_689_6,
                    2.742_140_265_181_387_966_9,
                    5.550_556_020_837_336_776_5,
                    11.098_338_700_409_393_575,
                    22.180_136_791_938_051_266,
                    44.355_519_796_692_983_865,
                    88.722_110_468_992_840_365,
                ],
            ),
        ];
        for (u, expect) in rows {
            for (i, &zd) in expect.iter().enumerate() {
                let s = -(i as f64);
                let z = hurwitz_zeta_deriv(s, u, &EMConfig::for_order(s, u)).unwrap();
                let tol = if i <= 4 { 1e-12 } else { 1e-9 } * zd.abs().max(1.0);
                assert!(
                    close(z.deriv.unwrap(), zd, tol),
                    "zeta'({s},{u}) = {:?} vs {zd}",
                    z.deriv
                );
            }
        }
    }

    #[test]
    fn digamma_examples() {
        assert!(close(digamma(1.0).unwrap(), -EULER, 1e-15));
        assert!(close(digamma(0.5).unwrap(), -2.0 * 2f64.ln() - EULER, 1e-14));
        let expect = -PI / (2.0 * 3f64.sqrt()) - 1.5 * 3f64.ln() - EULER;
        assert!(close(digamma(1.0 / 3.0).unwrap(), expect, 1e-14));
        // mpmath
        assert!(close(digamma(0.1).unwrap(), -10.423_754_940_411_076_795, 1e-13));
        assert!(close(digamma(10.5).unwrap(), 2.303_001_034_297_686_375_3, 1e-14));
        assert!(digamma(0.0).is_err());
        assert!(digamma(-2.5).is_err());
    }

    #[test]
    fn digamma_recurrence() {
        for u in [0.1, 0.7, 3.0] {
            let lhs = digamma(u + 1.0).unwrap() - digamma(u).unwrap();
            assert!(close(lhs, 1.0 / u, 1e-12), "u={u}");
        }
    }

    #[test]
    fn log_gamma_examples() {
        assert!(close(log_gamma(1.0).unwrap(), 0.0, 1e-14));
        assert!(close(log_gamma(0.5).unwrap(), 0.5 * PI.ln(), 1e-14));
        assert!(close(log_gamma(5.0).unwrap(), 24f64.ln(), 1e-14));
        // mpmath
        assert!(close(log_gamma(0.1).unwrap(), 2.252_712_651_734_205_959_9, 1e-14));
        assert!(close(log_gamma(1e-3).unwrap(), 6.907_178_885_383_853_682_5, 1e-13));
        assert!(close(log_gamma(30.2).unwrap(), 71.934_602_968_394_987_971, 1e-12));
        assert!(log_gamma(0.0).is_err());
    }

    #[test]
    fn recip_gamma_values() {
        assert!(close(recip_gamma(1.0), 1.0, 1e-14));
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-3.0), 0.0);
        // Gamma(-1/2) = -2 sqrt(pi)
        assert!(close(recip_gamma(-0.5), -1.0 / (2.0 * PI.sqrt()), 1e-14));
    }

    #[test]
    fn bendersky_examples() {
        let cfg = |k: u64| EMConfig::for_order(-(k as f64), 1.0);
        assert!(close(log_bendersky(0, &cfg(0)).unwrap(), 0.5 * (2.0 * PI).ln(), 1e-13));
        assert!(close(log_bendersky(1, &cfg(1)).unwrap(), LOG_A, 1e-13));
        let a2 = ZETA3 / (4.0 * PI * PI);
        assert!(close(log_bendersky(2, &cfg(2)).unwrap(), a2, 1e-13));
        let z3 = hurwitz_zeta(3.0, 1.0, &EMConfig::default()).unwrap().value;
        assert!(close(z3, ZETA3, 1e-14));
    }

    #[test]
    fn bendersky_even_index_formula() {
        // log A_{2k} = (-1)^{k+1} (2k)! zeta(2k+1) / (2 (2 pi)^{2k})
        let cfg = EMConfig::default();
        for k in 1..=3u64 {
            let n = 2 * k;
            let fact: f64 = (1..=n).map(|i| i as f64).product();
            let z = hurwitz_zeta(n as f64 + 1.0, 1.0, &cfg).unwrap().value;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let expect = sign * fact * z / (2.0 * (2.0 * PI).powi(n as i32));
            let got = log_bendersky(n, &EMConfig::for_order(-(n as f64), 1.0)).unwrap();
            assert!(close(got, expect, 1e-11), "k={k}: {got} vs {expect}");
        }
    }

    #[test]
    fn agm_properties() {
        assert_eq!(agm(3.5, 3.5).unwrap(), 3.5);
        let m = agm(1.0, 0.5).unwrap();
        assert!(m > 0.5 && m < 1.0);
        assert!(close(m, agm(0.5, 1.0).unwrap(), 1e-15));
        // mpmath
        let m = agm(2.0, (2.0 + 3f64.sqrt()).sqrt()).unwrap();
        assert!(close(m, 1.965_778_165_793_157_271_5, 1e-15));
        assert!(agm(0.0, 1.0).is_err());
        assert!(agm(1.0, -1.0).is_err());
    }

    #[test]
    fn lerch_identity() {
        let cfg = EMConfig::default();
        for u in [0.25, 0.5, 1.0, 1.5, 2.0, 3.7] {
            let zd = hurwitz_zeta_deriv(0.0, u, &cfg).unwrap().deriv.unwrap();
            let lg = log_gamma(u).unwrap() - 0.5 * (2.0 * PI).ln();
            assert!(close(zd, lg, 1e-10), "u={u}: {zd} vs {lg}");
        }
    }

    #[test]
    fn negative_integer_values_match_bernoulli() {
        for k in 1..=8u64 {
            for u in [0.5, 1.0, 2.0] {
                let s = 1.0 - k as f64;
                let z = hurwitz_zeta(s, u, &EMConfig::for_order(s, u)).unwrap().value;
                let b = exactnum::bernoulli_poly(k).eval_f64(u) / k as f64;
                assert!(close(z + b, 0.0, 1e-10), "k={k} u={u}");
                assert!(close(zeta_at_nonpositive_integer(k, u), -b, 1e-15));
            }
        }
    }

    #[test]
    fn shift_recurrence() {
        for s in [-3.0, -1.0, 0.5, 2.0] {
            for u in [0.3, 1.0, 2.0] {
                let z0 = hurwitz_zeta(s, u, &EMConfig::for_order(s, u)).unwrap().value;
                let z1 = hurwitz_zeta(s, u + 1.0, &EMConfig::for_order(s, u + 1.0)).unwrap().value;
                assert!(close(z0, z1 + u.powf(-s), 1e-11), "s={s} u={u}");
            }
        }
    }

    #[test]
    fn gamma_one_third_reconstruction() {
        let direct = log_gamma(1.0 / 3.0).unwrap().exp();
        assert!(close(direct, gamma_one_third_agm(), 1e-9));
        // mpmath
        assert!(close(direct, 2.678_938_534_707_747_633_7, 1e-13));
    }

    #[test]
    fn refinement_within_error_estimate() {
        for (s, u) in [(2.0, 1.0), (0.5, 0.3), (3.7, 0.25), (-0.5, 2.0)] {
            let cfg = EMConfig::default();
            let finer = EMConfig { head: cfg.head + 10, ..cfg };
            let a = hurwitz_zeta(s, u, &cfg).unwrap();
            let b = hurwitz_zeta(s, u, &finer).unwrap();
            assert!((a.value - b.value).abs() < a.err_est, "s={s} u={u}: {a:?} {b:?}");
        }
    }

    #[test]
    fn named_constants() {
        assert!(close(euler_gamma(), EULER, 1e-15));
        assert!(close(glaisher_kinkelin(), 1.282_427_129_100_622_636_9, 1e-13));
    }
}
