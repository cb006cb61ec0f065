//! A walk across the complex plane: evaluate zeta_N(s) in every region and
//! show which route the dispatcher chose, its error estimate, and a couple
//! of sanity anchors along the way.
//!
//!     cargo run --example plane_tour

use num_complex::Complex64;

use hzeta::zeta;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();

    let stops: [(f64, f64, &str); 8] = [
        (4.0, 0.0, "deep right half-plane"),
        (2.0, 1.0, "right half-plane, off-axis"),
        (1.1, 0.0, "just right of the pole"),
        (0.5, 0.0, "critical line"),
        (0.5, 3.0, "critical line, off-axis"),
        (-0.5, 0.0, "left edge of the strip"),
        (-2.5, 0.0, "left half-plane"),
        (-3.0, 5.0, "left half-plane, off-axis"),
    ];

    for order in 1..=3u32 {
        println!("== order N = {order} ==");
        println!(
            "{:>8} {:>6}  {:>22} {:>22} {:>9}  {:<13} {}",
            "Re(s)", "Im(s)", "Re zeta", "Im zeta", "abs err", "method", "stop"
        );
        for &(re, im, label) in &stops {
            let s = Complex64::new(re, im);
            let v = zeta::evaluate(order, s, &ctx)?;
            println!(
                "{:>8} {:>6}  {:>22.15e} {:>22.15e} {:>9.1e}  {:<13} {}",
                re,
                im,
                v.value.re,
                v.value.im,
                v.abs_error_estimate,
                v.method.as_str(),
                label
            );
        }
        println!();
    }

    // two anchors the reader can check against tables
    let pi = std::f64::consts::PI;
    let z2 = zeta::evaluate(1, Complex64::new(2.0, 0.0), &ctx)?;
    println!(
        "zeta(2)  = {:.15}   (pi^2/6 = {:.15})",
        z2.value.re,
        pi * pi / 6.0
    );
    let zm1 = zeta::evaluate(1, Complex64::new(-1.0, 0.0), &ctx)?;
    println!(
        "zeta(-1) = {:.15}   (-1/12  = {:.15})",
        zm1.value.re,
        -1.0 / 12.0
    );
    Ok(())
}
