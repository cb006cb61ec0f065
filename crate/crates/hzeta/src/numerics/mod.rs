//! Shared floating-point kernels: Taylor polynomials of the exponential, the
//! cancellation-safe exponential remainder, complex gamma, integer digamma,
//! Pochhammer symbols, adaptive quadrature and a real Hurwitz zeta.

mod gamma;
mod hurwitz;
mod quad;

pub use gamma::complex_gamma;
pub use hurwitz::hurwitz_zeta;
pub use quad::{integrate_finite, integrate_power_finite, integrate_semi_infinite, PowerIntegrand};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Euler-Mascheroni constant, 20 decimal digits.
pub const EULER_GAMMA: f64 = 0.57721566490153286061;

/// Taylor polynomial of the exponential, T_N(x) = sum_{k=0}^{N} x^k / k!,
/// evaluated by Horner recurrence.
pub fn taylor_poly(x: Complex64, n: u32) -> Result<Complex64> {
    if n > 64 {
        return Err(Error::OutOfRange(format!(
            "taylor_poly degree {n} > 64 serves no purpose"
        )));
    }
    // Horner: T_N(x) = 1 + x(1 + x/2(1 + x/3(...)))
    let mut acc = Complex64::new(1.0, 0.0);
    for k in (1..=n).rev() {
        acc = Complex64::new(1.0, 0.0) + acc * x / k as f64;
    }
    Ok(acc)
}

/// e^x - T_{N-1}(x), computed without catastrophic cancellation.
///
/// Near the origin the difference behaves like x^N/N!, so direct subtraction
/// loses digits; below |x| < N/2 the tail series sum_{k>=N} x^k/k! is summed
/// instead.
pub fn exp_remainder(x: Complex64, n: u32) -> Result<Complex64> {
    if n < 1 {
        return Err(Error::InvalidInput("exp_remainder requires N >= 1".into()));
    }
    if x.re > 709.0 {
        return Err(Error::Overflow(format!(
            "exp({}) exceeds the double exponent range",
            x.re
        )));
    }
    if x.norm() < n as f64 / 2.0 {
        // tail series: first term x^N/N!, ratio x/(k+1)
        let mut term = Complex64::new(1.0, 0.0);
        for k in 1..=n {
            term *= x / k as f64;
        }
        let mut sum = term;
        let mut k = n;
        loop {
            k += 1;
            term *= x / k as f64;
            sum += term;
            if term.norm() < f64::EPSILON * sum.norm() || k > n + 600 {
                break;
            }
        }
        Ok(sum)
    } else {
        Ok(x.exp() - taylor_poly(x, n - 1)?)
    }
}

/// Digamma at a positive integer: psi(N) = -gamma + sum_{j<N} 1/j.
pub fn digamma_int(n: u32) -> f64 {
    let mut h = 0.0;
    for j in 1..n {
        h += 1.0 / j as f64;
    }
    h - EULER_GAMMA
}

/// Pochhammer symbol (s)_k = s (s+1) ... (s+k-1) by direct product.
///
/// Deliberately not a gamma ratio: the product form has no pole traps at
/// nonpositive integer arguments.
pub fn pochhammer(s: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..k {
        acc *= s + j as f64;
    }
    acc
}

/// n! as a double; exact through n = 22, caller guards larger arguments.
pub fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
