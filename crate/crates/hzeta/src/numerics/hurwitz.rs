//! Real Hurwitz zeta in the shifted-index convention
//! zeta(s, a) = sum_{n >= 1} (n + a)^{-s},
//! which differs from the usual n-from-0 convention by the single term a^{-s}.

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

/// Direct summation plus an Euler-Maclaurin tail. Absolute error bounded by
/// the first omitted correction term and checked against target_abs_tol.
pub fn hurwitz_zeta(sigma: f64, a: f64, ctx: &PrecisionContext) -> Result<f64> {
    if sigma <= 1.0 {
        return Err(Error::Divergence(format!(
            "hurwitz_zeta diverges at sigma = {sigma} <= 1"
        )));
    }
    if a <= -1.0 {
        return Err(Error::OutOfRange(format!(
            "hurwitz_zeta requires a > -1, got {a}"
        )));
    }
    let mut m: usize = 64;
    loop {
        let mut sum = 0.0f64;
        for n in 1..m {
            sum += (n as f64 + a).powf(-sigma);
        }
        // Euler-Maclaurin for the remainder sum_{n >= m} (n+a)^{-sigma}
        let x = m as f64 + a;
        let s = sigma;
        let tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s) + s * x.powf(-s - 1.0) / 12.0
            - s * (s + 1.0) * (s + 2.0) * x.powf(-s - 3.0) / 720.0
            + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * x.powf(-s - 5.0) / 30240.0;
        // next correction has the Bernoulli-number weight 1/1209600
        let omitted = (s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 5.0) * (s + 6.0))
            .abs()
            * x.powf(-s - 7.0)
            / 1_209_600.0;
        if omitted <= ctx.target_abs_tol || m >= 1 << 20 {
            if omitted > ctx.target_abs_tol {
                return Err(Error::NonConvergence(
                    "hurwitz_zeta tail failed to meet tolerance".into(),
                ));
            }
            return Ok(sum + tail);
        }
        m *= 4;
    }
}
