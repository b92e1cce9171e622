//! Left and right translation sets of a loop and the closure conditions
//! that characterize LC- and RC-loops through them.
//!
//!     cargo run --example representations

use loopkit::enumerate::search_witness;
use loopkit::groups::symmetric;
use loopkit::repr::{self, Hypothesis};
use loopkit::{props, LoopTable, Side};

fn report(name: &str, l: &LoopTable) -> loopkit::Result<()> {
    let pl = repr::pi_lambda(l);
    println!("{name}: |Pi_lambda| = {}, representation: {}", pl.len(), repr::is_representation(&pl));
    for side in [Side::Left, Side::Right] {
        let t04 = repr::theorem_0_4_closure(l, side, Hypothesis::Bypass)?;
        println!(
            "  {side:<5} lemma_0_1 {:<5} lemma_0_2 {:<5} theorem_0_3 {:<5} theorem_0_4 {:<5}{} corollary_0_5 {}",
            repr::lemma_0_1_closure(l, side),
            repr::lemma_0_2_commutation(l, side),
            repr::theorem_0_3_closure(l, side),
            t04.value,
            if t04.hypothesis_bypassed { " (hypothesis bypassed)" } else { "" },
            repr::corollary_0_5_check(l, side),
        );
    }
    println!("  LC {}  RC {}  centrum square {}", props::is_lc(l), props::is_rc(l), props::is_centrum_square(l));
    Ok(())
}

fn main() -> loopkit::Result<()> {
    report("S3", &symmetric(3))?;
    let l = search_witness(5, |t| !props::is_lc(t))?.expect("order 5 has non-LC loops");
    report("first non-LC loop", &l)?;
    Ok(())
}
