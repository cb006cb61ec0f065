//! The pole chain of zeta_N: exact residues, exact rational values at the
//! negative integers below the chain, and the regular limit at s = 1, each
//! cross-checked against a numerical probe.
//!
//!     cargo run --example residues_and_special_values

use num_complex::Complex64;
use num_traits::ToPrimitive;

use hzeta::bernoulli::rational_string;
use hzeta::zeta;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();

    for order in 1..=3u32 {
        println!("== order N = {order} ==");
        println!("poles at the integers {}..=1, residues:", 2 - order as i64);
        for n in (2 - order as i64)..=1 {
            let res = zeta::residue_at(order, n)?;
            // probe: h * zeta_N(n + h) tends to the residue
            let h = 1e-5;
            let v = zeta::evaluate(order, Complex64::new(n as f64 + h, 0.0), &ctx)?;
            println!(
                "  s = {:>2}: residue = {:>10}  (probe h*zeta(s+h) = {:.8})",
                n,
                rational_string(&res),
                h * v.value.re
            );
        }

        println!("exact values below the pole chain:");
        for off in 1..=4i64 {
            let n = 2 - order as i64 - off;
            let exact = zeta::zeta_negative_int(order, n)?;
            println!(
                "  zeta_{order}({n}) = {} = {:.12e}",
                rational_string(&exact),
                exact.to_f64().unwrap()
            );
        }

        let limit = zeta::limit_at_one(order)?;
        let probe = zeta::limit_at_one_probe(order, 1e-5, &ctx)?;
        println!("regular part at s = 1: {limit:.12}  (probe {probe:.12})");
        if order == 1 {
            println!("  (this is Euler's constant gamma)");
        }
        println!();
    }
    Ok(())
}
