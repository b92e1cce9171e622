//! Evaluates the identity suite on a few named loops and on the first
//! nonassociative LC-loop, printing counterexamples where an identity fails.
//!
//!     cargo run --example properties

use loopkit::enumerate::search_witness;
use loopkit::groups::{cyclic, symmetric};
use loopkit::props::{self, Property, PropertyReport};
use loopkit::LoopTable;

fn show(name: &str, l: &LoopTable) {
    println!("{name} (order {})", l.order());
    let report = PropertyReport::evaluate(l, &Property::ALL);
    for (p, cex) in &report.results {
        match cex {
            None => println!("  {:<16} holds", p.name()),
            Some(t) => println!("  {:<16} fails at {t:?}", p.name()),
        }
    }
    println!("  nucleus {:?}  centrum {:?}  center {:?}", props::nucleus(l), props::centrum(l), props::center(l));
}

fn main() -> loopkit::Result<()> {
    show("Z4", &cyclic(4));
    show("S3", &symmetric(3));
    let lc = search_witness(6, |t| props::is_lc(t) && !props::is_associative(t))?
        .expect("nonassociative LC-loops exist at order 6");
    show("first nonassociative LC-loop", &lc);
    print!("{}", loopkit::text::emit(&lc));
    Ok(())
}
