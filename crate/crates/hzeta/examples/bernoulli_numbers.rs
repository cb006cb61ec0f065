//! Generalized Bernoulli numbers B_{N,n}: exact rationals from the
//! recursion, decimal reconstruction from the zeros, and the growth bounds
//! that control them.
//!
//!     cargo run --example bernoulli_numbers

use hzeta::bernoulli::{
    bernoulli_via_roots, generalized_bernoulli, howard_bounds, rational_string,
};
use hzeta::roots;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();

    // exact rational tables, orders 1..4
    for order in 1..=4u32 {
        let table = generalized_bernoulli(order, 8)?;
        print!("N = {order}: ");
        let row: Vec<String> = (0..=8).map(|n| rational_string(table.value(n))).collect();
        println!("{}", row.join(", "));
    }
    println!();

    // the same numbers recovered from the zeros of e^z - T_1(z)
    let table2 = generalized_bernoulli(2, 10)?;
    let roots2 = roots::root_table(2, 200, &ctx)?;
    println!("root-sum reconstruction at order 2:");
    println!(
        "{:>3} {:>22} {:>22} {:>10} {:>10}",
        "n", "exact", "via roots", "gap", "tail bnd"
    );
    for n in [4u32, 6, 8, 10] {
        let exact = table2.to_f64(n as usize);
        let est = bernoulli_via_roots(2, n, &roots2, &ctx)?;
        println!(
            "{:>3} {:>22.15e} {:>22.15e} {:>10.1e} {:>10.1e}",
            n,
            exact,
            est.value,
            (est.value - exact).abs(),
            est.tail_bound
        );
    }
    println!();

    // growth bounds: general, radius-based, and the conjectured n!/7^n
    let r1 = roots::root_table(2, 1, &ctx)?.roots[0].r;
    println!("growth bounds at order 2 (r1 = {r1:.12}):");
    println!(
        "{:>3} {:>14} {:>14} {:>14} {:>14}",
        "n", "|B_2,n|", "general", "radius", "conjecture"
    );
    for n in [8u32, 12, 16, 20] {
        let bounds = howard_bounds(n, r1)?;
        let b = generalized_bernoulli(2, n as usize)?
            .to_f64(n as usize)
            .abs();
        println!(
            "{:>3} {:>14.4e} {:>14.4e} {:>14.4e} {:>14.4e}",
            n, b, bounds.bound_general, bounds.bound_radius, bounds.bound_conjecture
        );
    }
    Ok(())
}
