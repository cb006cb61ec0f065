//! Left-half-plane evaluation through the convergent sum over the
//! upper-half-plane zeros z_k of e^z - T_{N-1}(z):
//!
//! ```text
//! zeta_N(s) = 2 (-1)^{N-1} (N-1)! Gamma(2-N-s)
//!             * sum_k r_k^{s-1} cos[(s-1)(pi - theta_k)]
//! ```
//!
//! with z_k = r_k e^{i theta_k}. For complex s the summand is the average of
//! the principal powers (-z_k)^{s-1} and (-conj(z_k))^{s-1}, which reduces to
//! the cosine form on the real axis. The remainder past the table is summed
//! by Euler-Maclaurin along the smooth phase continuation z(kappa) of the
//! zero family (see `roots::phase_zero`), including the integral term and the
//! first two endpoint corrections.

use std::cell::RefCell;

use num_complex::Complex64;

use super::{EvalResult, Method, Region};
use crate::error::{Error, Result};
use crate::numerics::{complex_gamma, factorial, integrate_finite, taylor_poly};
use crate::precision::PrecisionContext;
use crate::roots::{self, RootTable};

/// Largest table size the automatic extension will request.
const MAX_AUTO_ROOTS: u32 = 2048;

/// Average of the conjugate-pair principal powers at the zero z.
fn pair_term(z: Complex64, sm1: Complex64) -> Complex64 {
    0.5 * ((-z).powc(sm1) + (-z.conj()).powc(sm1))
}

/// d/dkappa of the pair term along the phase continuation, using
/// dz/dkappa = 2 pi i / (1 - T_{N-2}(z)/T_{N-1}(z)).
fn pair_term_derivative(order: u32, z: Complex64, sm1: Complex64) -> Result<Complex64> {
    let t1 = taylor_poly(z, order - 1)?;
    let t2 = if order >= 2 {
        taylor_poly(z, order - 2)?
    } else {
        Complex64::new(0.0, 0.0)
    };
    let dz = Complex64::new(0.0, 2.0 * std::f64::consts::PI) / (Complex64::new(1.0, 0.0) - t2 / t1);
    Ok(0.5 * sm1 * ((-z).powc(sm1 - 1.0) * (-dz) + (-z.conj()).powc(sm1 - 1.0) * (-dz.conj())))
}

/// Euler-Maclaurin remainder sum_{k > K} t(k):
/// integral_K^inf t - t(K)/2 - t'(K)/12, plus an error proxy from the size of
/// the next endpoint correction.
fn em_tail(
    order: u32,
    k_last: u32,
    sm1: Complex64,
    ctx: &PrecisionContext,
) -> Result<(Complex64, f64)> {
    let kf = k_last as f64;
    // t(kappa) sampled by quadrature; solver failures are carried out of the
    // closure through a cell because the integrator takes a plain function
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let t_of = |kappa: f64| -> Complex64 {
        let seed = roots::phase_seed(order, kappa);
        match roots::phase_zero(order, kappa, seed) {
            Ok(z) => pair_term(z, sm1),
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    // integral_K^inf t(kappa) dkappa with kappa = K e^u
    let integrand = |u: f64| -> Complex64 { t_of(kf * u.exp()) * kf * u.exp() };
    let tol = 0.02 * ctx.target_abs_tol;
    let mut integral = Complex64::new(0.0, 0.0);
    let mut quad_err = 0.0f64;
    let mut lo = 0.0f64;
    let mut hi = 0.5f64;
    loop {
        let (v, e) = integrate_finite(&integrand, lo, hi, tol, ctx)?;
        integral += v;
        quad_err += e;
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        // the integrand decays like e^{Re(s) u}; 200 units of u is far past
        // exhaustion for every supported Re(s) < 0, and capping u keeps
        // kappa = K e^u inside the double range
        if (v.norm() + e < 0.25 * tol && hi >= 4.0) || hi > 200.0 {
            break;
        }
        lo = hi;
        hi = if hi < 1.0 { hi + 0.5 } else { 2.0 * hi };
    }
    let zk = roots::phase_zero(order, kf, roots::phase_seed(order, kf))?;
    let tk = pair_term(zk, sm1);
    let dk = pair_term_derivative(order, zk, sm1)?;
    let tail = integral - 0.5 * tk - dk / 12.0;
    // next correction is t'''(K)/720; the decrement of t' over one index is a
    // cheap, conservative stand-in for the higher derivative scale
    let zk1 = roots::phase_zero(
        order,
        kf + 1.0,
        zk + Complex64::new(0.0, 2.0 * std::f64::consts::PI),
    )?;
    let dk1 = pair_term_derivative(order, zk1, sm1)?;
    let em_err = (dk - dk1).norm() / 12.0 + quad_err;
    Ok((tail, em_err))
}

/// Root-sum evaluation of zeta_N(s) for Re(s) < 0.
///
/// The table is extended automatically (internally, up to a cap) when its
/// tail term exceeds the context tolerance.
pub fn zeta_left_series(
    order: u32,
    s: Complex64,
    roots_table: &RootTable,
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    ctx.validate()?;
    if s.re >= 0.0 {
        return Err(Error::Domain(format!(
            "root-sum representation requires Re(s) < 0, got {}",
            s.re
        )));
    }
    if roots_table.order != order {
        return Err(Error::InvalidInput("root table order mismatch".into()));
    }
    if roots_table.count() < 2 {
        return Err(Error::InsufficientRoots("need at least 2 roots".into()));
    }
    let sm1 = s - 1.0;
    let sign = if order % 2 == 1 { 1.0 } else { -1.0 };
    let prefactor = 2.0
        * sign
        * factorial(order - 1)
        * complex_gamma(Complex64::new(2.0 - order as f64, 0.0) - s)?;

    let mut table = roots_table.clone();
    loop {
        let mut partial = Complex64::new(0.0, 0.0);
        for root in &table.roots {
            partial += pair_term(root.z(), sm1);
        }
        let k_last = table.roots.last().map(|r| r.index).unwrap_or(0);
        let (tail, em_err) = em_tail(order, k_last, sm1, ctx)?;
        let value = prefactor * (partial + tail);
        let abs_error = prefactor.norm() * em_err
            + 8.0 * f64::EPSILON * prefactor.norm() * partial.norm().max(1.0);
        if abs_error <= ctx.target_abs_tol || table.count() as u32 >= MAX_AUTO_ROOTS {
            if abs_error > 100.0 * ctx.target_abs_tol {
                return Err(Error::InsufficientRoots(format!(
                    "tail error {abs_error:.3e} with {} roots (cap {MAX_AUTO_ROOTS})",
                    table.count()
                )));
            }
            return Ok(EvalResult {
                value,
                abs_error_estimate: abs_error,
                method: Method::LeftRootsum,
                region: Region::Left,
            });
        }
        let next = (table.count() as u32 * 2).min(MAX_AUTO_ROOTS);
        table = roots::root_table(order, next, ctx)?;
    }
}
