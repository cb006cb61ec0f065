//! Tabulate the upper-half-plane zeros of e^z - T_{N-1}(z) for the first few
//! orders, in both cartesian and polar form, and show the bracket intervals
//! that certify the N = 2, 3 tables.
//!
//!     cargo run --example root_tables

use hzeta::roots;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();

    for order in 2..=4u32 {
        let table = roots::root_table(order, 8, &ctx)?;
        println!(
            "== order N = {order} ({}) ==",
            if table.certified {
                "bracket-certified"
            } else {
                "phase-continued, residual-checked"
            }
        );
        println!(
            "{:>3} {:>20} {:>20} {:>20} {:>18}",
            "k", "x", "y", "r", "theta"
        );
        for root in &table.roots {
            println!(
                "{:>3} {:>20.14} {:>20.14} {:>20.14} {:>18.14}",
                root.index, root.x, root.y, root.r, root.theta
            );
        }
        println!();
    }

    // brackets pin the imaginary parts to disjoint vertical strips
    println!("bracket containment, order 2, first 8 roots:");
    let table = roots::root_table(2, 8, &ctx)?;
    for root in &table.roots {
        let (lo, hi) = roots::bracket_n2(root.index);
        println!(
            "  k = {}: y = {:>18.12} in ({:>18.12}, {:>18.12})",
            root.index, root.y, lo, hi
        );
    }
    Ok(())
}
