//! Run the verification suites — growth inequalities in the left half-plane,
//! dominance over the classical zeta, Bernoulli bounds, cross-route
//! agreements, and the reference tables — and print the human-readable
//! report.
//!
//!     cargo run --example inequality_checks

use hzeta::verify;
use hzeta::PrecisionContext;

fn main() -> hzeta::Result<()> {
    let ctx = PrecisionContext::default();

    let reports = verify::run_suite("all", &ctx)?;
    print!("{}", verify::reports_to_table(&reports));

    if verify::all_passed(&reports) {
        println!("\nall non-advisory checks passed");
    } else {
        println!("\nFAILURES PRESENT — see the rows above");
        std::process::exit(1);
    }
    Ok(())
}
