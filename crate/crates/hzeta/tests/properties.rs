//! Randomized property suites over the shared kernels and the evaluator:
//! algebraic recurrences that must hold identically, checked on generated
//! inputs with relative tolerances.

use num_complex::Complex64;
use proptest::prelude::*;

use hzeta::numerics::{complex_gamma, exp_remainder, pochhammer, taylor_poly};
use hzeta::precision::PrecisionContext;
use hzeta::roots;
use hzeta::zeta;

fn moderate_complex() -> impl Strategy<Value = Complex64> {
    (-8.0f64..8.0, -8.0f64..8.0).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    /// e^x - T_{N-1}(x) telescopes: removing one more Taylor term removes
    /// exactly x^N/N!.
    #[test]
    fn exp_remainder_telescopes(x in moderate_complex(), n in 1u32..12) {
        let a = exp_remainder(x, n).unwrap();
        let b = exp_remainder(x, n + 1).unwrap();
        let nfact: f64 = (1..=n).map(|k| k as f64).product();
        let term = x.powu(n) / nfact;
        let scale = a.norm().max(b.norm()).max(term.norm()).max(1e-300);
        prop_assert!((a - b - term).norm() <= 1e-11 * scale.max(1.0));
    }

    /// Taylor polynomials nest: T_n(x) = T_{n-1}(x) + x^n/n!.
    #[test]
    fn taylor_poly_nests(x in moderate_complex(), n in 1u32..16) {
        let a = taylor_poly(x, n).unwrap();
        let b = taylor_poly(x, n - 1).unwrap();
        let nfact: f64 = (1..=n).map(|k| k as f64).product();
        let scale = a.norm().max(1.0);
        prop_assert!((a - b - x.powu(n) / nfact).norm() <= 1e-12 * scale);
    }

    /// Gamma recurrence Gamma(z + 1) = z Gamma(z), away from the poles.
    #[test]
    fn gamma_recurrence(re in -6.0f64..6.0, im in -6.0f64..6.0) {
        let z = Complex64::new(re, im);
        // stay clear of the nonpositive integers where both sides blow up
        prop_assume!(im.abs() > 1e-3 || re > 0.1 || (re - re.round()).abs() > 1e-2);
        let a = complex_gamma(z + 1.0).unwrap();
        let b = z * complex_gamma(z).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(b.norm()).max(1e-30));
    }

    /// Pochhammer recurrence (s)_{k+1} = (s)_k (s + k).
    #[test]
    fn pochhammer_recurrence(s in moderate_complex(), k in 0u32..20) {
        let a = pochhammer(s, k + 1);
        let b = pochhammer(s, k) * (s + k as f64);
        prop_assert!((a - b).norm() <= 1e-11 * a.norm().max(b.norm()).max(1.0));
    }
}

proptest! {
    // evaluation is costly, so keep the case count small
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Schwarz reflection: zeta_N(conj s) = conj zeta_N(s), in every region.
    #[test]
    fn conjugation_symmetry(
        order in 1u32..4,
        re in -4.0f64..4.0,
        im in 0.3f64..3.0,
    ) {
        // stay off the pole chain
        prop_assume!(re > 1.1 || (re - re.round()).abs() > 0.05);
        let ctx = PrecisionContext::default();
        let s = Complex64::new(re, im);
        let a = zeta::evaluate(order, s, &ctx).unwrap();
        let b = zeta::evaluate(order, s.conj(), &ctx).unwrap();
        let tol = (a.abs_error_estimate + b.abs_error_estimate).max(1e-9);
        prop_assert!((a.value.conj() - b.value).norm() <= tol);
    }
}

/// Root tables are sorted by strictly increasing modulus with angles in
/// (0, pi/2), and the built-in ordering check agrees.
#[test]
fn root_table_monotonicity() {
    let ctx = PrecisionContext::default();
    for order in 2..=4u32 {
        let table = roots::root_table(order, 40, &ctx).unwrap();
        table.check_ordering().unwrap();
        for pair in table.roots.windows(2) {
            assert!(pair[0].r < pair[1].r, "N={order}: moduli must increase");
        }
        for root in &table.roots {
            assert!(root.theta > 0.0 && root.theta < std::f64::consts::FRAC_PI_2);
            assert!(root.y > 0.0);
        }
    }
}
