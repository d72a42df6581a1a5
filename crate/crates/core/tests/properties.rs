//! Randomized invariants.

use proptest::prelude::*;
use zalpha_core::closedform::{log_z_closed, s_d_closed};
use zalpha_core::exactnum::rational;
use zalpha_core::hurwitz::{hurwitz_zeta, EMConfig};
use zalpha_core::rstirling::{row_by_gf, row_by_recurrence, shift_for};
use zalpha_core::series::{log_tn, DifferenceMethod};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_rows_agree(n in 0usize..14, num in 1i64..20, den in 1i64..20) {
        let u = rational(num, den);
        prop_assert_eq!(row_by_gf(n, shift_for(&u)), row_by_recurrence(n, shift_for(&u)));
    }

    #[test]
    fn row_sum_is_the_rising_product(n in 0usize..15, u in 0.05f64..4.0) {
        let r = 1.0 - u;
        let row = row_by_gf(n, r);
        let product: f64 = (0..n).map(|j| 1.0 + r + j as f64).product();
        prop_assert!((row.sum() - product).abs() <= 1e-12 * product.abs().max(1.0));
    }

    #[test]
    fn zeta_shift_recurrence(s in 1.2f64..8.0, u in 0.1f64..6.0) {
        let cfg = EMConfig::default();
        let a = hurwitz_zeta(s, u, &cfg).unwrap().value;
        let b = hurwitz_zeta(s, u + 1.0, &cfg).unwrap().value;
        let step = u.powf(-s);
        prop_assert!((a - b - step).abs() <= 1e-12 * step.max(1.0));
    }

    #[test]
    fn difference_modes_agree(n in 0u64..=30, u in 0.3f64..5.0) {
        let a = log_tn(n, u, DifferenceMethod::AlternatingSum).unwrap();
        let f = log_tn(n, u, DifferenceMethod::FrullaniQuadrature).unwrap();
        prop_assert!((a - f).abs() < 1e-8);
        if n > 0 {
            prop_assert!(f > 0.0);
        }
    }

    #[test]
    fn closed_form_at_d0_is_hasse_value(s in -4.5f64..6.0, u in 0.2f64..4.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let z = hurwitz_zeta(s, u, &EMConfig::for_order(s, u)).unwrap();
        let v = s_d_closed(0, s, u).unwrap();
        prop_assert!((v.value - (s - 1.0) * z.value).abs() <= 1e-11 * ((s - 1.0) * z.value).abs().max(1.0));
    }

    #[test]
    fn log_z_decreases_with_d(d in 0u32..7, u in 0.2f64..5.0) {
        // every log t_n(u) is positive, so larger weights 1/(n+d+1) mean a larger sum
        let a = log_z_closed(d, u).unwrap().value;
        let b = log_z_closed(d + 1, u).unwrap().value;
        prop_assert!(b < a);
    }
}
