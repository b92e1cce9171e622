//! Counts loops by order and by identity class.
//!
//!     cargo run --release --example enumerate -- 6

use std::time::Instant;

use loopkit::enumerate::{count_loops, EnumerationJob, Filter};
use loopkit::props;

fn main() -> loopkit::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let lc: Filter = &props::is_lc;
    let c: Filter = &props::is_c;
    let nonassoc: Filter = &|t| !props::is_associative(t);
    println!("{:>2} {:>8} {:>6} {:>6} {:>12} {:>9}", "n", "loops", "LC", "C", "nonassoc LC", "time");
    for n in 1..=n_max {
        let start = Instant::now();
        let all = count_loops(n, &[])?;
        let corpus = EnumerationJob::new(n).collect_par()?;
        let count = |fs: &[Filter]| corpus.iter().filter(|t| fs.iter().all(|f| f(t))).count();
        println!(
            "{n:>2} {all:>8} {:>6} {:>6} {:>12} {:>9.2?}",
            count(&[lc]),
            count(&[c]),
            count(&[lc, nonassoc]),
            start.elapsed()
        );
    }
    Ok(())
}
