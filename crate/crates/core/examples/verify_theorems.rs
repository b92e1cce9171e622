//! Sweeps every registered statement over all loops up to a given order
//! (default 5) and prints the report.
//!
//!     cargo run --release --example verify_theorems -- 6

use std::time::Instant;

use loopkit::registry::{self, Verdict};

fn main() -> loopkit::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let start = Instant::now();
    let reports = registry::verify_all(n_max)?;
    print!("{}", registry::render_human(&reports));
    let violated = reports.iter().filter(|r| r.verdict == Verdict::Violated).count();
    println!("\n{} statements, {violated} violated, {:.2?}", reports.len(), start.elapsed());
    Ok(())
}
