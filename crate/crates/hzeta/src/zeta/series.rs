//! Right-half-plane evaluation through the generalized Dirichlet series
//! zeta_N(s) = sum_n mu_N(n, s) / n^{s+N-1}.
//!
//! The per-term coefficients are carried by a stable recurrence in n rather
//! than recomputed from polynomial powers, and the truncated tail is resummed
//! with a Laplace (Watson-lemma) expansion of the underlying integral
//! representation of each term, which turns the slowly decaying remainder
//! into a short asymptotic series in the small parameter (N!/n)^{1/N}.

use num_complex::Complex64;

use super::{EvalResult, Method, Region};
use crate::error::{Error, Result};
use crate::numerics::{complex_gamma, factorial};
use crate::precision::PrecisionContext;

/// Number of orders kept in the tail expansion.
const TAIL_ORDERS: usize = 8;

/// Taylor coefficients phi_m of phi(x) = x - log T_{N-1}(x) for m up to
/// `mmax`; the series starts at order N with phi_N = 1/N!.
fn phi_coeffs(order: u32, mmax: usize) -> Vec<f64> {
    // p_m: coefficients of T_{N-1}
    let mut p = vec![0.0f64; mmax + 1];
    for (m, pm) in p.iter_mut().enumerate().take(order as usize) {
        *pm = 1.0 / factorial(m as u32);
    }
    // log-series recurrence: lambda_m = p_m - (1/m) sum_{j<m} j lambda_j p_{m-j}
    let mut lam = vec![0.0f64; mmax + 1];
    for m in 1..=mmax {
        let mut acc = p[m];
        for j in 1..m {
            acc -= (j as f64 / m as f64) * lam[j] * p[m - j];
        }
        lam[m] = acc;
    }
    let mut phi = vec![0.0f64; mmax + 1];
    if mmax >= 1 {
        phi[1] = 1.0 - lam[1];
    }
    for m in 2..=mmax {
        phi[m] = -lam[m];
    }
    phi
}

/// Coefficient table e[j][d] of exp(A) with
/// A = -nu t - N! sum_{m=N+1}^{N+J} phi_m nu^{m-N} t^m,
/// expanded through nu-order J; e[j] is a dense polynomial in t.
fn exp_expansion(order: u32) -> Vec<Vec<f64>> {
    let n = order as usize;
    let jj = TAIL_ORDERS;
    let phi = phi_coeffs(order, n + jj);
    let nfact = factorial(order);
    let mut e: Vec<Vec<f64>> = vec![Vec::new(); jj + 1];
    e[0] = vec![1.0];
    for j0 in 1..=jj {
        // alpha_{j0}(t): the nu^{j0} slice of A
        let mut alpha = vec![0.0f64; n + j0 + 1];
        if j0 == 1 {
            alpha[1] = -1.0;
        }
        alpha[n + j0] += -nfact * phi[n + j0];
        if alpha.iter().all(|&a| a == 0.0) {
            continue;
        }
        // multiply e by exp(nu^{j0} alpha), truncated at nu-order J
        let mut new_e = e.clone();
        let mut pow = alpha.clone();
        let mut i = 1usize;
        let mut inv_ifact = 1.0f64;
        while j0 * i <= jj {
            inv_ifact /= i as f64;
            for j in 0..=(jj - j0 * i) {
                if e[j].is_empty() {
                    continue;
                }
                let dst = j + j0 * i;
                let need = e[j].len() + pow.len() - 1;
                if new_e[dst].len() < need {
                    new_e[dst].resize(need, 0.0);
                }
                for (a, &ea) in e[j].iter().enumerate() {
                    if ea == 0.0 {
                        continue;
                    }
                    for (b, &pb) in pow.iter().enumerate() {
                        new_e[dst][a + b] += ea * pb * inv_ifact;
                    }
                }
            }
            i += 1;
            if j0 * i <= jj {
                // pow <- pow * alpha
                let mut next = vec![0.0f64; pow.len() + alpha.len() - 1];
                for (a, &pa) in pow.iter().enumerate() {
                    if pa == 0.0 {
                        continue;
                    }
                    for (b, &ab) in alpha.iter().enumerate() {
                        next[a + b] += pa * ab;
                    }
                }
                pow = next;
            }
        }
        e = new_e;
    }
    e
}

/// Euler-Maclaurin evaluation of sum_{m > m0} m^{-a} for Re(a) > 1.
pub(crate) fn em_power_tail(a: Complex64, m0: f64) -> Complex64 {
    let lx = m0.ln();
    let xp = |e: Complex64| (-e * lx).exp(); // m0^{-e}
    xp(a - 1.0) / (a - 1.0) - 0.5 * xp(a) + a * xp(a + 1.0) / 12.0
        - a * (a + 1.0) * (a + 2.0) * xp(a + 3.0) / 720.0
        + a * (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) * xp(a + 5.0) / 30240.0
}

/// Resummed remainder sum_{n > m_cut} mu_N(n, s)/n^{s+N-1} and an estimate of
/// its own truncation error, from the Laplace expansion of
/// term_n = (1/Gamma(c)) int_0^inf x^{c-1} e^{-x} e^{-(n-1) phi(x)} dx.
fn watson_tail(order: u32, c: Complex64, m_cut: usize) -> Result<(Complex64, f64)> {
    let n = order as f64;
    let e = exp_expansion(order);
    let nfact = factorial(order);
    let gamma_c = complex_gamma(c)?;
    let ln_nfact = nfact.ln();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut last = 0.0f64;
    for (j, ej) in e.iter().enumerate() {
        // W_j = sum_d e[j][d] Gamma((c+d)/N)/N
        let mut wj = Complex64::new(0.0, 0.0);
        for (d, &coef) in ej.iter().enumerate() {
            if coef == 0.0 {
                continue;
            }
            wj += coef * complex_gamma((c + d as f64) / n)? / n;
        }
        let a = (c + j as f64) / n;
        let contrib = wj * ((a * ln_nfact).exp()) * em_power_tail(a, m_cut as f64 - 1.0) / gamma_c;
        tail += contrib;
        last = contrib.norm();
    }
    // the expansion is asymptotic; the last retained order is the natural
    // error proxy (doubled for headroom)
    Ok((tail, 2.0 * last))
}

/// Dirichlet-series evaluation of zeta_N(s) for Re(s) > 1.2.
pub fn zeta_right_series(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<EvalResult> {
    ctx.validate()?;
    if order < 1 {
        return Err(Error::InvalidInput("order must be >= 1".into()));
    }
    let sigma = s.re;
    if sigma <= 1.0 {
        return Err(Error::Divergence(format!(
            "the series diverges at Re(s) = {sigma} <= 1"
        )));
    }
    if sigma < 1.2 {
        // convergence like n^{-(sigma+N-1)/N} is impractically slow here;
        // the caller is expected to fall back to quadrature
        return Err(Error::SlowConvergence(sigma));
    }
    let nord = order as usize;
    let c = s + (order as f64 - 1.0);
    let beta = (sigma + order as f64 - 1.0) / order as f64; // term decay power
    let nfact = factorial(order);
    // cutoff keeping the tail parameter nu = (N!/n)^{1/N} small
    let m_cut = ((nfact * (1.0f64 / 0.12).powi(order as i32)).ceil() as usize)
        .clamp(240, 20_000)
        .min(ctx.max_series_terms);
    let band = nord - 1;
    let mut inv_fact = vec![0.0f64; band + 1];
    for (d, f) in inv_fact.iter_mut().enumerate() {
        *f = 1.0 / factorial(d as u32);
    }

    // per-n coefficient vector q_k(n) = a_k(N, n) (c)_k / n^k; q(1) = [1]
    let mut q: Vec<Complex64> = vec![Complex64::new(1.0, 0.0)];
    let mut partial = Complex64::new(1.0, 0.0); // f_1 = 1
    let mut n_used = m_cut;
    let mut nn = 1usize;
    while nn < m_cut {
        let nf = nn as f64;
        let new_len = q.len() + band;
        let mut qn = vec![Complex64::new(0.0, 0.0); new_len];
        let ratio = nf / (nf + 1.0);
        let inv_n = 1.0 / nf;
        let mut scale_k = 1.0f64; // ratio^k
        for (k, slot) in qn.iter_mut().enumerate() {
            let mut sum = if k < q.len() {
                q[k]
            } else {
                Complex64::new(0.0, 0.0)
            };
            // Pochhammer ratio (c)_k/(c)_{k-d} built incrementally
            let mut r = Complex64::new(1.0, 0.0);
            let mut fd = 1.0f64; // n^{-d}/d!
            for d in 1..=band.min(k) {
                r *= c + (k - d) as f64;
                fd *= inv_n / d as f64;
                if k - d < q.len() {
                    sum += q[k - d] * r * fd;
                }
            }
            *slot = sum * scale_k;
            scale_k *= ratio;
        }
        q = qn;
        nn += 1;
        let total: Complex64 = q.iter().sum();
        let fnn = (-c * (nn as f64).ln()).exp() * total;
        partial += fnn;
        // early exit once the resummed tail at this cutoff is already below
        // the requested tolerance
        if nn % 16 == 0 && nn >= 96 {
            let nu = (nfact / nn as f64).powf(1.0 / order as f64);
            let crude_tail = fnn.norm() * nn as f64 / (beta - 1.0);
            if crude_tail * nu.powi(TAIL_ORDERS as i32) < 0.05 * ctx.target_abs_tol {
                n_used = nn;
                break;
            }
        }
    }
    n_used = n_used.min(nn);

    let (tail, tail_err) = watson_tail(order, c, n_used)?;
    let value = partial + tail;
    let abs_error = tail_err + 4.0 * f64::EPSILON * n_used as f64 * partial.norm().max(1.0);
    Ok(EvalResult {
        value,
        abs_error_estimate: abs_error,
        method: Method::RightSeries,
        region: Region::Right,
    })
}
