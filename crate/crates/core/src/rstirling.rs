//! Shifted r-Stirling numbers.
//!
//! Row `n` at shift `r` holds the coefficients of
//! `(x + r)(x + r + 1) ... (x + r + n - 1)`, indexed by the power of `x`.
//! With `r = 1 - u` entry `k` of row `d` is the coefficient multiplying
//! `zeta(s - k, u)` in the closed form for `S_d(s, u)`.
//!
//! Rows can be built in exact rational arithmetic or in `f64`; the caller
//! picks the mode through the coefficient type.

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exactnum::{self, BigRational};

/// Number type usable for r-Stirling rows.
pub trait Coefficient:
    Clone + Debug + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_u64(n: u64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
}

impl Coefficient for f64 {
    fn from_u64(n: u64) -> Self {
        n as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        exactnum::to_f64(q)
    }
}

impl Coefficient for BigRational {
    fn from_u64(n: u64) -> Self {
        exactnum::integer(n as i64)
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RStirlingRow<T> {
    n: usize,
    r: T,
    coeffs: Vec<T>,
}

impl<T: Coefficient> RStirlingRow<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> &T {
        &self.r
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Row sum, i.e. the generating function at `x = 1`.
    pub fn sum(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |a, b| a + b)
    }
}

/// The shift `r = 1 - u` used throughout.
pub fn shift_for<T: Coefficient>(u: &T) -> T {
    T::one() - u.clone()
}

/// Expands the generating function one linear factor at a time.
pub fn row_by_gf<T: Coefficient>(n: usize, r: T) -> RStirlingRow<T> {
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(T::one());
    for j in 0..n {
        let a = r.clone() + T::from_u64(j as u64);
        // multiply by (x + a), highest power first so the update is in place
        coeffs.push(T::zero());
        for m in (0..coeffs.len()).rev() {
            let lower = if m > 0 { coeffs[m - 1].clone() } else { T::zero() };
            coeffs[m] = coeffs[m].clone() * a.clone() + lower;
        }
    }
    RStirlingRow { n, r, coeffs }
}

/// Fills the triangle with
/// `(n + r) [n+r, m+1+r]_r + [n+r, m+r]_r = [n+1+r, m+1+r]_r`.
pub fn row_by_recurrence<T: Coefficient>(n: usize, r: T) -> RStirlingRow<T> {
    let mut triangle: Vec<Vec<T>> = vec![vec![T::one()]];
    for row in 0..n {
        let prev = &triangle[row];
        let factor = T::from_u64(row as u64) + r.clone();
        let entry = |m: isize| -> T {
            if m < 0 || m as usize >= prev.len() {
                T::zero()
            } else {
                prev[m as usize].clone()
            }
        };
        let next: Vec<T> = (0..=row as isize + 1)
            .map(|m| factor.clone() * entry(m) + entry(m - 1))
            .collect();
        triangle.push(next);
    }
    RStirlingRow {
        n,
        r,
        coeffs: triangle.pop().expect("triangle has rows"),
    }
}

/// `sum_{l=k}^{d} [d, l] C(l, k) (1 - u)^{l - k}`.
pub fn entry_by_unsigned_identity<T: Coefficient>(d: u64, k: i64, u: &T) -> Result<T> {
    if k < 0 || k as u64 > d {
        return Err(domain(format!("entry index k={k} outside 0..={d}")));
    }
    let r = shift_for(u);
    let mut acc = T::zero();
    let mut r_pow = T::one();
    for l in k as u64..=d {
        let stir = exactnum::stirling1_unsigned(d, l as i64);
        let binom = exactnum::binomial(l, k);
        acc = acc + T::from_rational(&(stir * binom)) * r_pow.clone();
        r_pow = r_pow * r.clone();
    }
    Ok(acc)
}
