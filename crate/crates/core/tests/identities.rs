//! Exact rational identities between the double sum, Bernoulli polynomials
//! and the r-Stirling rows.

use num_traits::{One, Pow, Zero};
use zalpha_core::closedform::s_d_closed;
use zalpha_core::exactnum::{bernoulli_poly, binomial, integer, rational, to_f64, BigRational};
use zalpha_core::rstirling::{entry_by_unsigned_identity, row_by_gf, row_by_recurrence, shift_for};

fn u_set() -> Vec<BigRational> {
    vec![integer(1), rational(1, 2), rational(2, 3)]
}

/// `sum_k (-1)^k C(n,k) (k+u)^m`, exactly.
fn inner(n: u64, u: &BigRational, m: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 0..=n {
        let term = binomial(n, k as i64) * Pow::pow(integer(k as i64) + u.clone(), m);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn factorial(d: u64) -> BigRational {
    (1..=d).fold(BigRational::one(), |acc, i| acc * integer(i as i64))
}

/// Left side: the double sum at `s = 1 - m`, which terminates at `n = m`.
fn terminating_sum(m: u32, d: u64, u: &BigRational) -> BigRational {
    (0..=m as u64)
        .map(|n| inner(n, u, m) / integer((n + d + 1) as i64))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Right side: `(1/d!) sum_k c_k B_{m+k}(u)`.
fn bernoulli_side(m: u32, d: u64, u: &BigRational) -> BigRational {
    let row = row_by_gf(d as usize, shift_for(u));
    let mut acc = BigRational::zero();
    for (k, c) in row.coeffs().iter().enumerate() {
        acc += c.clone() * bernoulli_poly(m as u64 + k as u64).eval(u);
    }
    acc / factorial(d)
}

#[test]
fn finite_bernoulli_identity_is_exact() {
    for u in u_set() {
        for m in 1..=8 {
            for d in 0..=4 {
                assert_eq!(terminating_sum(m, d, &u), bernoulli_side(m, d, &u), "m={m} d={d} u={u}");
            }
        }
    }
}

#[test]
fn inner_sums_vanish_beyond_the_power() {
    for u in u_set() {
        for m in 1..=8u32 {
            for n in (m as u64 + 1)..=20 {
                assert!(inner(n, &u, m).is_zero(), "n={n} m={m} u={u}");
            }
            assert!(!inner(m as u64, &u, m).is_zero());
        }
    }
}

#[test]
fn three_constructions_of_rstirling_rows_agree() {
    for u in u_set() {
        for n in 0..=12usize {
            let gf = row_by_gf(n, shift_for(&u));
            let rec = row_by_recurrence(n, shift_for(&u));
            assert_eq!(gf, rec, "n={n} u={u}");
            for (k, c) in gf.coeffs().iter().enumerate() {
                let via_unsigned = entry_by_unsigned_identity(n as u64, k as i64, &u).unwrap();
                assert_eq!(&via_unsigned, c, "n={n} k={k} u={u}");
            }
        }
    }
}

#[test]
fn closed_form_matches_terminating_sum() {
    for (num, den) in [(1, 2), (1, 1), (2, 1)] {
        let u = rational(num, den);
        let uf = num as f64 / den as f64;
        for m in 1..=6u32 {
            for d in 0..=4u32 {
                let exact = to_f64(&terminating_sum(m, d as u64, &u));
                let v = s_d_closed(d, 1.0 - m as f64, uf).unwrap();
                assert!((v.value - exact).abs() < 1e-10, "m={m} d={d} u={uf}: {} vs {exact}", v.value);
            }
        }
    }
}
