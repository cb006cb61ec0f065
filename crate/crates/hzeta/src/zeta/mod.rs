//! Whole-plane evaluation of the hypergeometric zeta functions zeta_N(s).
//!
//! Four numerical routes cover the plane, each used where it is strongest:
//!
//! * `Re(s) > 1.2` — the generalized Dirichlet series with a resummed tail
//!   ([`zeta_right_series`]);
//! * `1 < Re(s) <= 1.2` — direct quadrature of the defining integral
//!   ([`zeta_integral`]);
//! * `-1 < Re(s) <= 1` — the subtracted-integrand continuation through the
//!   critical strip ([`zeta_strip`]);
//! * `Re(s) <= -1` — the convergent sum over the zeros of e^z - T_{N-1}(z)
//!   ([`zeta_left_series`]), or the exact rational value at integers below
//!   the pole chain ([`zeta_negative_int`]).
//!
//! [`evaluate`] dispatches between them; overlapping validity regions are the
//! basis of the cross-checks in [`crate::verify`].

mod leftsum;
mod series;

pub use leftsum::zeta_left_series;
pub use series::zeta_right_series;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bernoulli::generalized_bernoulli;
use crate::error::{Error, Result};
use crate::numerics::{
    complex_gamma, digamma_int, exp_remainder, factorial, integrate_finite, integrate_power_finite,
    integrate_semi_infinite, PowerIntegrand,
};
use crate::precision::PrecisionContext;
use crate::roots;

/// Exclusion radius around the poles {2-N, ..., 1}.
pub const POLE_RADIUS: f64 = 1e-6;

/// Evaluation route actually taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    RightSeries,
    RightIntegral,
    Strip,
    LeftRootsum,
    ExactNegativeInteger,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::RightSeries => "right-series",
            Method::RightIntegral => "right-integral",
            Method::Strip => "strip",
            Method::LeftRootsum => "left-rootsum",
            Method::ExactNegativeInteger => "exact-negative-integer",
        }
    }
}

/// Region of the plane the argument fell in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    Right,
    StripPositive,
    StripNegative,
    Left,
    NegativeInteger,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Right => "right",
            Region::StripPositive => "strip-positive",
            Region::StripNegative => "strip-negative",
            Region::Left => "left",
            Region::NegativeInteger => "negative-integer",
        }
    }
}

/// One evaluation of zeta_N(s).
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub method: Method,
    pub region: Region,
}

/// Exact coefficients a_k(N, n) of (T_{N-1}(x))^{n-1}.
#[derive(Debug, Clone)]
pub struct MuCoefficient {
    pub order: u32,
    pub n: u32,
    pub poly_coeffs: Vec<BigRational>,
}

/// Exact expansion (T_{N-1}(x))^{n-1} = sum_k a_k x^k by repeated polynomial
/// multiplication in rational arithmetic.
pub fn poly_power_coeffs(order: u32, n: u32) -> Result<MuCoefficient> {
    if order < 1 || n < 1 {
        return Err(Error::InvalidInput("order and n must be >= 1".into()));
    }
    let degree = (order as usize - 1) * (n as usize - 1);
    if degree > 10_000 {
        return Err(Error::DegreeOverflow(degree));
    }
    let base: Vec<BigRational> = (0..order as usize)
        .map(|k| {
            let mut f = BigInt::one();
            for j in 1..=k {
                f *= j;
            }
            BigRational::new(BigInt::one(), f)
        })
        .collect();
    let mut coeffs = vec![BigRational::one()];
    for _ in 1..n {
        let mut next = vec![BigRational::zero(); coeffs.len() + base.len() - 1];
        for (i, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        coeffs = next;
    }
    Ok(MuCoefficient {
        order,
        n,
        poly_coeffs: coeffs,
    })
}

/// mu_N(n, s) = sum_k a_k(N, n)/n^k (s + N - 1)_k.
pub fn mu_coefficient(order: u32, n: u32, s: Complex64) -> Result<Complex64> {
    let mu = poly_power_coeffs(order, n)?;
    let c = s + (order as f64 - 1.0);
    let inv_n = 1.0 / n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut poch = Complex64::new(1.0, 0.0);
    let mut scale = 1.0f64;
    for (k, a) in mu.poly_coeffs.iter().enumerate() {
        if k > 0 {
            poch *= c + (k as f64 - 1.0);
            scale *= inv_n;
        }
        sum += a.to_f64().unwrap_or(f64::NAN) * scale * poch;
    }
    Ok(sum)
}

/// B_{N,m} as doubles, m = 0..=n_max.
fn bernoulli_f64(order: u32, n_max: usize) -> Result<Vec<f64>> {
    let t = generalized_bernoulli(order, n_max)?;
    Ok((0..=n_max).map(|m| t.to_f64(m)).collect())
}

/// Depth of the power-series table used for W(x) = x^N/(e^x - T_{N-1}(x)).
const W_SERIES_TERMS: usize = 48;

/// W(x) = N! sum_{m >= m0} B_{N,m} x^{m-m0}/m!, the generating series of the
/// generalized Bernoulli numbers with the first m0 terms removed. Radius of
/// convergence is the first root modulus (> 6 for every order), so the
/// series is fast and cancellation-free on x in (0, 1].
fn w_series(b: &[f64], order: u32, m0: usize, x: f64) -> f64 {
    let nfact = factorial(order);
    let mut inv_mfact = 1.0 / factorial(m0 as u32);
    let mut xp = 1.0f64;
    let mut sum = 0.0f64;
    for (m, &bm) in b.iter().enumerate().skip(m0) {
        sum += bm * inv_mfact * xp;
        xp *= x;
        inv_mfact /= (m + 1) as f64;
    }
    nfact * sum
}

/// W(x) = x^N/(e^x - T_{N-1}(x)) by whichever form is stable at x.
fn w_direct(b: &[f64], order: u32, x: f64) -> Result<f64> {
    if x < 0.5 {
        Ok(w_series(b, order, 0, x))
    } else {
        let r = exp_remainder(Complex64::new(x, 0.0), order)?;
        Ok(x.powi(order as i32) / r.re)
    }
}

/// Direct quadrature of the defining integral, Re(s) > 1:
/// zeta_N(s) = (1/Gamma(s+N-1)) int_0^inf x^{s-2} W(x) dx.
pub fn zeta_integral(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<EvalResult> {
    ctx.validate()?;
    if s.re <= 1.0 {
        return Err(Error::Domain(format!(
            "the defining integral requires Re(s) > 1, got {}",
            s.re
        )));
    }
    let c = s + (order as f64 - 1.0);
    let gamma_c = complex_gamma(c)?;
    let b = bernoulli_f64(order, W_SERIES_TERMS)?;
    let g =
        |x: f64| -> Complex64 { Complex64::new(w_direct(&b, order, x).unwrap_or(f64::NAN), 0.0) };
    let integrand = PowerIntegrand {
        exponent: s - 2.0,
        regular: &g,
    };
    let (v, e) = integrate_semi_infinite(&integrand, &[1.0, 5.0, 20.0, 80.0], ctx)?;
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::QuadratureNonConverged(
            "integrand evaluation failed".into(),
        ));
    }
    let value = v / gamma_c;
    Ok(EvalResult {
        value,
        abs_error_estimate: e / gamma_c.norm() + 8.0 * f64::EPSILON * value.norm(),
        method: Method::RightIntegral,
        region: Region::Right,
    })
}

/// Upper cutoff for the large-x integrals of the strip route; W decays like
/// x^N e^{-x}, so the truncated mass is below 1e-40.
const STRIP_CUTOFF: f64 = 120.0;

/// Pole-separated continuation, valid on -1 < Re(s) <= 1.3 away from the
/// poles. The first four terms of the small-x series of W are integrated in
/// closed form, isolating the poles at s = 1, 0, -1, -2 exactly:
///
/// ```text
/// Gamma(c) zeta_N(s) = sum_{m=0}^{3} N! B_{N,m} / (m! (s+m-1))
///   + int_0^1 [W(x) - N! sum_{m<4} B_{N,m} x^m/m!] x^{s-2} dx
///   + int_1^inf W(x) x^{s-2} dx
/// ```
///
/// so the quadrature only ever sees regular, O(1) integrands; nothing blows
/// up as s approaches a pole, which is what the residue and limit probes
/// need.
pub(crate) fn strip_core(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<EvalResult> {
    ctx.validate()?;
    if s.re <= -1.0 || s.re > 1.3 {
        return Err(Error::Domain(format!(
            "strip continuation covers -1 < Re(s) <= 1.3, got {}",
            s.re
        )));
    }
    for m in 0..4i32 {
        if (s - Complex64::new(1.0 - m as f64, 0.0)).norm() < 1e-12 {
            return Err(Error::PoleProximity((s - (1.0 - m as f64)).norm()));
        }
    }
    let c = s + (order as f64 - 1.0);
    let gamma_c = complex_gamma(c)?;
    let nfact = factorial(order);
    let b = bernoulli_f64(order, W_SERIES_TERMS)?;

    // explicit pole terms from the subtracted series head
    let mut pole_terms = Complex64::new(0.0, 0.0);
    for m in 0..4usize {
        pole_terms += nfact * b[m] / factorial(m as u32) / (s + (m as f64 - 1.0));
    }

    let quad_tol = (0.2 * ctx.target_abs_tol * gamma_c.norm()).max(1e-18);

    // (0, 1]: the subtracted integrand is x^{s+2} g(x) with g regular
    let g = |x: f64| -> Complex64 { Complex64::new(w_series(&b, order, 4, x), 0.0) };
    let head = PowerIntegrand {
        exponent: s + 2.0,
        regular: &g,
    };
    let (i1, e1) = integrate_power_finite(&head, 1.0, quad_tol, ctx)?;

    // [1, cutoff]: full integrand, exponentially decaying
    let full = |x: f64| -> Complex64 {
        let w = w_direct(&b, order, x).unwrap_or(f64::NAN);
        ((s - 2.0) * x.ln()).exp() * w
    };
    let mut i2 = Complex64::new(0.0, 0.0);
    let mut e2 = 0.0f64;
    for win in [1.0, 5.0, 20.0, 60.0, STRIP_CUTOFF].windows(2) {
        let (v, e) = integrate_finite(&full, win[0], win[1], 0.25 * quad_tol, ctx)?;
        i2 += v;
        e2 += e;
    }
    let value = (pole_terms + i1 + i2) / gamma_c;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::QuadratureNonConverged(
            "strip integrand evaluation failed".into(),
        ));
    }
    let region = if s.re > 0.0 {
        Region::StripPositive
    } else {
        Region::StripNegative
    };
    Ok(EvalResult {
        value,
        abs_error_estimate: (e1 + e2) / gamma_c.norm() + 16.0 * f64::EPSILON * value.norm(),
        method: Method::Strip,
        region,
    })
}

/// Strip continuation for -1 < Re(s) < 1 (public surface; the poles at 0 and
/// 1 and, for N >= 3, the pole at -1 are rejected within [`POLE_RADIUS`]).
pub fn zeta_strip(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<EvalResult> {
    if s.re <= -1.0 || s.re >= 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "zeta_strip covers -1 < Re(s) <= 1, got Re(s) = {}",
            s.re
        )));
    }
    for pole in [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)] {
        if (s - pole).norm() < POLE_RADIUS {
            return Err(Error::PoleProximity((s - pole).norm()));
        }
    }
    check_pole_proximity(order, s)?;
    strip_core(order, s, ctx)
}

/// n! as an exact big integer.
fn big_factorial_int(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for j in 2..=n {
        f *= j;
    }
    f
}

/// Binomial coefficient C(a, b) as an exact rational.
fn big_binomial(a: u64, b: u64) -> BigRational {
    if b > a {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    for j in 0..b {
        num *= a - j;
    }
    BigRational::new(num, big_factorial_int(b))
}

/// Exact zeta_N(n) = (-1)^{-n-N+1} B_{N,1-n} / C(1-n, N) at integers
/// n < 2 - N.
pub fn zeta_negative_int(order: u32, n: i64) -> Result<BigRational> {
    if n >= 2 - order as i64 {
        return Err(Error::OutOfRange(format!(
            "exact values exist only below the pole chain: need n < {}, got {n}",
            2 - order as i64
        )));
    }
    let idx = (1 - n) as u64; // >= N + 1
    let table = generalized_bernoulli(order, idx as usize)?;
    let b = table.value(idx as usize).clone();
    let binom = big_binomial(idx, order as u64);
    let sign = if (-n - order as i64 + 1).rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    Ok(sign * b / binom)
}

/// Exact residue of zeta_N at the pole s = n, 2-N <= n <= 1:
/// Res = (2-n) C(N, 2-n) B_{N,1-n}.
pub fn residue_at(order: u32, n: i64) -> Result<BigRational> {
    if n < 2 - order as i64 || n > 1 {
        return Err(Error::OutOfRange(format!(
            "poles of order {order} sit at integers in [{}, 1], got {n}",
            2 - order as i64
        )));
    }
    let table = generalized_bernoulli(order, (1 - n) as usize)?;
    let b = table.value((1 - n) as usize).clone();
    let factor = BigRational::from_integer(BigInt::from(2 - n));
    Ok(factor * big_binomial(order as u64, (2 - n) as u64) * b)
}

/// Closed form of lim_{s->1} [zeta_N(s) - N!/(s-1)] = log(N!) - N psi(N).
pub fn limit_at_one(order: u32) -> Result<f64> {
    if order < 1 {
        return Err(Error::InvalidInput("order must be >= 1".into()));
    }
    Ok(factorial(order).ln() - order as f64 * digamma_int(order))
}

/// Numerical companion of [`limit_at_one`]: zeta_N(1+h) - N/h through the
/// pole-separated strip form, which cancels the 1/h mass exactly. The
/// subtracted coefficient is the residue N of zeta_N at s = 1 (for N = 1
/// this is the classical zeta(1+h) - 1/h -> gamma).
pub fn limit_at_one_probe(order: u32, h: f64, ctx: &PrecisionContext) -> Result<f64> {
    if h <= 0.0 || h > 0.3 {
        return Err(Error::InvalidInput(
            "probe offset must be in (0, 0.3]".into(),
        ));
    }
    let v = strip_core(order, Complex64::new(1.0 + h, 0.0), ctx)?;
    Ok(v.value.re - order as f64 / h)
}

/// The entire function I_N(s) = zeta_N(s)/Gamma(2-N-s); at integers the
/// closed form (-1)^{n+N-1} N! B_{N,1-n}/(1-n)! (zero for n >= 2).
pub fn contour_function(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<Complex64> {
    if s.im.abs() < 1e-12 && (s.re - s.re.round()).abs() < 1e-9 {
        let n = s.re.round() as i64;
        if n >= 2 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let table = generalized_bernoulli(order, (1 - n) as usize)?;
        let b = table.value((1 - n) as usize).clone();
        let value = BigRational::from_integer(big_factorial_int(order as u64)) * b
            / BigRational::from_integer(big_factorial_int((1 - n) as u64));
        let sign = if (n + order as i64 - 1).rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        };
        return Ok(Complex64::new(
            sign * value.to_f64().unwrap_or(f64::NAN),
            0.0,
        ));
    }
    // off the integers, divide out the gamma factor; near s = 1 the
    // pole-separated strip form keeps the quotient accurate enough for
    // finite differencing
    let z = if s.re > -1.0 && s.re <= 1.3 {
        strip_core(order, s, ctx)?
    } else {
        evaluate(order, s, ctx)?
    };
    let g = complex_gamma(Complex64::new(2.0 - order as f64, 0.0) - s)?;
    Ok(z.value / g)
}

/// Reject arguments within [`POLE_RADIUS`] of the pole chain {2-N, ..., 1}.
fn check_pole_proximity(order: u32, s: Complex64) -> Result<()> {
    for n in (2 - order as i64)..=1 {
        let d = (s - Complex64::new(n as f64, 0.0)).norm();
        if d < POLE_RADIUS {
            return Err(Error::PoleProximity(d));
        }
    }
    Ok(())
}

/// Whole-plane dispatcher.
///
/// Region map: Re(s) > 1.2 series (falling back to quadrature if the series
/// flags itself slow); 1 < Re(s) <= 1.2 quadrature; -1 < Re(s) <= 1 strip;
/// Re(s) <= -1 root-sum, except exact rational values at real integers below
/// the pole chain.
pub fn evaluate(order: u32, s: Complex64, ctx: &PrecisionContext) -> Result<EvalResult> {
    ctx.validate()?;
    if order < 1 {
        return Err(Error::InvalidInput("order must be >= 1".into()));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::InvalidInput("s must be finite".into()));
    }
    check_pole_proximity(order, s)?;
    // exact rational path at real integers below the pole chain
    if s.im.abs() < 1e-12 {
        let nr = s.re.round();
        if (s.re - nr).abs() < 1e-9 && nr < (2 - order as i64) as f64 {
            let q = zeta_negative_int(order, nr as i64)?;
            let v = q.to_f64().unwrap_or(f64::NAN);
            return Ok(EvalResult {
                value: Complex64::new(v, 0.0),
                abs_error_estimate: 4.0 * f64::EPSILON * v.abs(),
                method: Method::ExactNegativeInteger,
                region: Region::NegativeInteger,
            });
        }
    }
    let sigma = s.re;
    if sigma > 1.2 {
        match zeta_right_series(order, s, ctx) {
            Ok(r) => Ok(r),
            Err(Error::SlowConvergence(_)) => zeta_integral(order, s, ctx),
            Err(e) => Err(e),
        }
    } else if sigma > 1.0 {
        // very close to the pole at 1 the defining integral is numerically
        // divergent; the pole-separated strip form covers that band
        match zeta_integral(order, s, ctx) {
            Err(Error::QuadratureNonConverged(_)) if sigma <= 1.3 => strip_core(order, s, ctx),
            other => other,
        }
    } else if sigma > -1.0 {
        strip_core(order, s, ctx)
    } else {
        let table = roots::root_table(order, 64, ctx)?;
        zeta_left_series(order, s, &table, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use std::f64::consts::PI;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn poly_power_binomials() {
        // (1 + x)^{n-1} gives binomial coefficients at order 2
        let mu = poly_power_coeffs(2, 5).unwrap();
        let want = [1i64, 4, 6, 4, 1];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(
                mu.poly_coeffs[k],
                BigRational::from_integer(BigInt::from(*w))
            );
        }
        // empty power
        assert_eq!(poly_power_coeffs(4, 1).unwrap().poly_coeffs.len(), 1);
        // (1 + x + x^2/2)^2 = 1 + 2x + 2x^2 + x^3 + x^4/4
        let mu = poly_power_coeffs(3, 3).unwrap();
        let want = [rat(1, 1), rat(2, 1), rat(2, 1), rat(1, 1), rat(1, 4)];
        assert_eq!(mu.poly_coeffs, want);
    }

    #[test]
    fn poly_power_invariants() {
        for order in 1..=4u32 {
            for n in 1..=8u32 {
                let mu = poly_power_coeffs(order, n).unwrap();
                let len = (order as usize - 1) * (n as usize - 1) + 1;
                assert_eq!(mu.poly_coeffs.len(), len);
                assert!(mu.poly_coeffs[0].is_one());
                assert!(mu.poly_coeffs.iter().all(|a| a.is_positive()));
            }
        }
    }

    #[test]
    fn poly_power_degree_guard() {
        assert!(matches!(
            poly_power_coeffs(3, 6000),
            Err(Error::DegreeOverflow(_))
        ));
    }

    #[test]
    fn mu_at_one_is_power_of_n() {
        // mu_N(n, 1) = n^{N-1}
        assert!((mu_coefficient(2, 3, c(1.0, 0.0)).unwrap().re - 3.0).abs() < 1e-12);
        for order in 1..=4u32 {
            for n in 1..=20u32 {
                let v = mu_coefficient(order, n, c(1.0, 0.0)).unwrap();
                let want = (n as f64).powi(order as i32 - 1);
                assert!(
                    (v.re - want).abs() < 1e-9 * want.max(1.0),
                    "N={order}, n={n}: {v}"
                );
            }
        }
        // order 1 collapses to the single constant term
        assert_eq!(mu_coefficient(1, 7, c(2.5, 1.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn integral_reproduces_classical_values() {
        let v = zeta_integral(1, c(2.0, 0.0), &ctx()).unwrap();
        assert!((v.value.re - PI * PI / 6.0).abs() < 1e-9, "{:?}", v);
        let v = zeta_integral(1, c(3.0, 0.0), &ctx()).unwrap();
        assert!((v.value.re - 1.2020569031595943).abs() < 1e-9);
    }

    #[test]
    fn integral_matches_series_dual_route() {
        for &(order, re, im) in &[(2u32, 2.0, 0.0), (2, 2.0, 1.0), (3, 3.0, 0.0)] {
            let a = zeta_integral(order, c(re, im), &ctx()).unwrap();
            let b = zeta_right_series(order, c(re, im), &ctx()).unwrap();
            assert!(
                (a.value - b.value).norm() < 1e-8,
                "N={order}, s={re}+{im}i: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn strip_reproduces_classical_half() {
        let v = zeta_strip(1, c(0.5, 0.0), &ctx()).unwrap();
        assert!((v.value.re + 1.4603545088095868).abs() < 1e-9, "{:?}", v);
        assert_eq!(v.region, Region::StripPositive);
    }

    #[test]
    fn strip_classical_negative_half() {
        // zeta(-1/2), classical
        let v = zeta_strip(1, c(-0.5, 0.0), &ctx()).unwrap();
        assert!((v.value.re + 0.2078862249773545).abs() < 1e-9, "{:?}", v);
        assert_eq!(v.region, Region::StripNegative);
    }

    #[test]
    fn strip_agrees_with_rootsum() {
        for order in [2u32, 3] {
            let a = zeta_strip(order, c(-0.5, 0.0), &ctx()).unwrap();
            let table = roots::root_table(order, 128, &ctx()).unwrap();
            let b = zeta_left_series(order, c(-0.5, 0.0), &table, &ctx()).unwrap();
            assert!(
                (a.value - b.value).norm() < 1e-8,
                "N={order}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn strip_rejects_poles_and_range() {
        assert!(matches!(
            zeta_strip(2, c(1e-8, 0.0), &ctx()),
            Err(Error::PoleProximity(_))
        ));
        assert!(matches!(
            zeta_strip(2, c(1.0 - 1e-8, 0.0), &ctx()),
            Err(Error::PoleProximity(_))
        ));
        assert!(zeta_strip(2, c(-1.5, 0.0), &ctx()).is_err());
        // N = 3 pole at -1
        assert!(matches!(
            zeta_strip(3, c(-1.0 + 1e-8, 1e-9), &ctx()),
            Err(Error::PoleProximity(_))
        ));
    }

    #[test]
    fn exact_negative_integers() {
        assert_eq!(zeta_negative_int(1, -1).unwrap(), rat(-1, 12));
        assert_eq!(zeta_negative_int(2, -1).unwrap(), rat(1, 18));
        assert_eq!(zeta_negative_int(2, -2).unwrap(), rat(-1, 270));
        assert!(zeta_negative_int(2, 0).is_err());
        assert!(zeta_negative_int(1, 1).is_err());
    }

    #[test]
    fn residues_match_closed_forms() {
        for order in 1..=4u32 {
            assert_eq!(
                residue_at(order, 1).unwrap(),
                BigRational::from_integer(BigInt::from(order))
            );
        }
        assert_eq!(residue_at(2, 0).unwrap(), rat(-2, 3));
        assert_eq!(residue_at(3, -1).unwrap(), rat(3, 40));
        assert!(residue_at(2, -1).is_err());
        assert!(residue_at(2, 2).is_err());
    }

    #[test]
    fn limit_at_one_values() {
        use crate::numerics::EULER_GAMMA;
        assert!((limit_at_one(1).unwrap() - EULER_GAMMA).abs() < 1e-12);
        let want2 = 2.0f64.ln() - 2.0 * (1.0 - EULER_GAMMA);
        assert!((limit_at_one(2).unwrap() - want2).abs() < 1e-12);
        let want3 = 6.0f64.ln() - 3.0 * (1.5 - EULER_GAMMA);
        assert!((limit_at_one(3).unwrap() - want3).abs() < 1e-12);
    }

    #[test]
    fn limit_probe_approaches_closed_form() {
        for order in 1..=3u32 {
            let closed = limit_at_one(order).unwrap();
            let p3 = limit_at_one_probe(order, 1e-3, &ctx()).unwrap();
            let p4 = limit_at_one_probe(order, 1e-4, &ctx()).unwrap();
            assert!((p3 - closed).abs() < 1e-2, "N={order}: {p3} vs {closed}");
            assert!((p4 - closed).abs() < 1e-3, "N={order}: {p4} vs {closed}");
            assert!((p4 - closed).abs() < (p3 - closed).abs());
        }
    }

    #[test]
    fn contour_function_integer_values() {
        // I_N(n) = 0 for n >= 2
        for order in 1..=3u32 {
            for n in 2..=4i64 {
                let v = contour_function(order, c(n as f64, 0.0), &ctx()).unwrap();
                assert_eq!(v, c(0.0, 0.0));
            }
        }
        let v = contour_function(1, c(1.0, 0.0), &ctx()).unwrap();
        assert!((v.re + 1.0).abs() < 1e-14);
        let v = contour_function(2, c(1.0, 0.0), &ctx()).unwrap();
        assert!((v.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn evaluate_dispatch_map() {
        let e = evaluate(2, c(3.0, 0.0), &ctx()).unwrap();
        assert_eq!(e.method, Method::RightSeries);
        assert!(e.value.re > 1.2020569);
        let e = evaluate(2, c(1.1, 0.0), &ctx()).unwrap();
        assert_eq!(e.method, Method::RightIntegral);
        let e = evaluate(1, c(0.5, 0.0), &ctx()).unwrap();
        assert_eq!(e.method, Method::Strip);
        assert!((e.value.re + 1.4603545088).abs() < 1e-7);
        let e = evaluate(2, c(-1.5, 0.0), &ctx()).unwrap();
        assert_eq!(e.method, Method::LeftRootsum);
        let e = evaluate(2, c(-1.0, 0.0), &ctx()).unwrap();
        assert_eq!(e.method, Method::ExactNegativeInteger);
        assert!((e.value.re - 1.0 / 18.0).abs() < 1e-14);
    }

    #[test]
    fn evaluate_rejects_poles() {
        assert!(matches!(
            evaluate(2, c(1.0 + 1e-9, 0.0), &ctx()),
            Err(Error::PoleProximity(_))
        ));
        assert!(matches!(
            evaluate(3, c(-1.0, 1e-9), &ctx()),
            Err(Error::PoleProximity(_))
        ));
    }

    #[test]
    fn evaluate_conjugation_across_regions() {
        for &(re, im) in &[(2.5, 1.5), (1.1, 0.5), (0.4, 1.0), (-0.6, 2.0), (-1.7, 1.0)] {
            let a = evaluate(2, c(re, im), &ctx()).unwrap();
            let b = evaluate(2, c(re, -im), &ctx()).unwrap();
            let budget = (a.abs_error_estimate + b.abs_error_estimate).max(1e-12);
            assert!(
                (a.value.conj() - b.value).norm() <= budget,
                "s = {re}+{im}i: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn residue_probe_at_the_poles() {
        // (s - n) zeta_N(n + h) -> Res as h -> 0, O(h) error
        for order in [2u32, 3] {
            for n in (2 - order as i64)..=1 {
                let res = residue_at(order, n).unwrap().to_f64().unwrap();
                for &h in &[1e-3, 1e-4] {
                    let s = c(n as f64 + h, 0.0);
                    let v = evaluate(order, s, &ctx()).unwrap();
                    let probe = h * v.value.re;
                    assert!(
                        (probe - res).abs() < 40.0 * h * res.abs().max(1.0),
                        "N={order}, n={n}, h={h}: probe {probe} vs {res}"
                    );
                }
            }
        }
    }
}
