//! Emit a CSV grid of zeta_N(sigma) for N = 1, 2, 3 on the real axis to the
//! right of the pole — ready to pipe into a plotting tool.
//!
//!     cargo run --example plot_data > zeta.csv

use num_complex::Complex64;

use hzeta::zeta;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();
    let orders = [1u32, 2, 3];
    let (lo, hi, step) = (1.1f64, 5.0f64, 0.05f64);

    println!("sigma,zeta1,zeta2,zeta3");
    let steps = ((hi - lo) / step).round() as usize;
    for i in 0..=steps {
        let sigma = lo + step * i as f64;
        let mut row = vec![format!("{sigma:.9e}")];
        for &order in &orders {
            let v = zeta::evaluate(order, Complex64::new(sigma, 0.0), &ctx)?;
            row.push(format!("{:.9e}", v.value.re));
        }
        println!("{}", row.join(","));
    }
    Ok(())
}
