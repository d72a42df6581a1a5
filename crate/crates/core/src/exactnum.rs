//! Exact integer and rational kernels.
//!
//! Binomial coefficients, harmonic numbers, Bernoulli numbers and polynomials
//! and unsigned Stirling numbers of the first kind, all in arbitrary-size
//! rational arithmetic. Bernoulli numbers use the `x/(e^x - 1)` convention, so
//! `B_1 = -1/2`.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational;

/// Number of Bernoulli numbers and Stirling rows kept by the shared tables.
pub const DEFAULT_MEMO_CAP: usize = 64;

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a plain decimal such as `-0.125` exactly.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let negative = int.starts_with('-');
    let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut numer: BigInt = digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    Some(BigRational::new(numer, denom))
}

/// Converts an exact rational to the nearest-ish `f64`.
///
/// Large numerators/denominators are scaled down before division so the
/// conversion does not overflow to `inf / inf`.
pub fn to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 1000).max(0) as usize;
    let shift_d = (db - 1000).max(0) as usize;
    let n = (q.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigRational {
    BigRational::from_integer(binomial_int(n, k))
}

pub(crate) fn binomial_int(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `H_k = 1 + 1/2 + ... + 1/k`, with `H_0 = 0`.
pub fn harmonic(k: u64) -> BigRational {
    (1..=k).fold(BigRational::zero(), |acc, j| acc + rational(1, j as i64))
}

/// Memoized Bernoulli numbers and unsigned Stirling rows.
///
/// Entries up to `cap` are cached; requests beyond the cap are computed on
/// demand and not stored.
pub struct KernelTables {
    cap: usize,
    bernoulli: Mutex<Vec<BigRational>>,
    stirling: Mutex<Vec<Vec<BigInt>>>,
}

impl KernelTables {
    pub fn new(cap: usize) -> Self {
        KernelTables {
            cap,
            bernoulli: Mutex::new(vec![BigRational::one()]),
            stirling: Mutex::new(vec![vec![BigInt::one()]]),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn bernoulli(&self, k: usize) -> BigRational {
        let mut table = self.bernoulli.lock().unwrap_or_else(|e| e.into_inner());
        if k < table.len() {
            return table[k].clone();
        }
        if k <= self.cap {
            extend_bernoulli(&mut table, k);
            return table[k].clone();
        }
        let mut scratch = table.clone();
        drop(table);
        extend_bernoulli(&mut scratch, k);
        scratch.swap_remove(k)
    }

    pub fn stirling_row(&self, n: usize) -> Vec<BigInt> {
        let mut rows = self.stirling.lock().unwrap_or_else(|e| e.into_inner());
        if n < rows.len() {
            return rows[n].clone();
        }
        let limit = n.min(self.cap);
        while rows.len() <= limit {
            let next = next_stirling_row(rows.last().expect("row 0 present"));
            rows.push(next);
        }
        if n < rows.len() {
            return rows[n].clone();
        }
        let mut row = rows.last().expect("row present").clone();
        drop(rows);
        for _ in limit..n {
            row = next_stirling_row(&row);
        }
        row
    }
}

impl Default for KernelTables {
    fn default() -> Self {
        KernelTables::new(DEFAULT_MEMO_CAP)
    }
}

fn extend_bernoulli(table: &mut Vec<BigRational>, k: usize) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    while table.len() <= k {
        let m = table.len();
        let mut acc = BigRational::zero();
        for (j, b) in table.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += BigRational::from_integer(binomial_int(m as u64 + 1, j as i64)) * b;
        }
        table.push(-acc / integer(m as i64 + 1));
    }
}

// Row n of [n, m] from row n-1: multiply the rising factorial by (x + n - 1).
fn next_stirling_row(prev: &[BigInt]) -> Vec<BigInt> {
    let n_minus_1 = BigInt::from(prev.len() - 1);
    let mut next = vec![BigInt::zero(); prev.len() + 1];
    for (m, c) in prev.iter().enumerate() {
        next[m] += c * &n_minus_1;
        next[m + 1] += c;
    }
    next
}

pub fn tables() -> &'static KernelTables {
    static TABLES: OnceLock<KernelTables> = OnceLock::new();
    TABLES.get_or_init(KernelTables::default)
}

/// `B_k` with `B_1 = -1/2`.
pub fn bernoulli_number(k: u64) -> BigRational {
    tables().bernoulli(k as usize)
}

/// Unsigned Stirling number of the first kind `[n, m]`: the coefficient of
/// `x^m` in `x (x+1) ... (x+n-1)`.
pub fn stirling1_unsigned(n: u64, m: i64) -> BigRational {
    if m < 0 || m as u64 > n {
        return BigRational::zero();
    }
    BigRational::from_integer(tables().stirling_row(n as usize)[m as usize].clone())
}

/// Polynomial with exact rational coefficients, `coeffs[i]` multiplying `x^i`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let coeff = if a.is_one() && i > 0 { String::new() } else { format!("{a}") };
            let sep = if coeff.is_empty() { "" } else { "*" };
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coeff}{sep}u")?,
                _ => write!(f, "{coeff}{sep}u^{i}")?,
            }
        }
        Ok(())
    }
}

/// Bernoulli polynomial `B_m(u) = sum_j C(m, j) B_j u^{m-j}`.
pub fn bernoulli_poly(m: u64) -> RationalPoly {
    let mut coeffs = vec![BigRational::zero(); m as usize + 1];
    for j in 0..=m {
        coeffs[(m - j) as usize] = binomial(m, j as i64) * bernoulli_number(j);
    }
    RationalPoly::new(coeffs)
}
