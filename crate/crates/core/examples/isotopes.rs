//! Principal isotopes, normalization back to a loop, and the C-loop isotope
//! harness on shaped isotopisms.
//!
//!     cargo run --example isotopes

use loopkit::enumerate::search_witness;
use loopkit::isotopy::{self, IsotopeStatement};
use loopkit::{props, text, Side};

fn main() -> loopkit::Result<()> {
    let g = search_witness(5, |t| !props::is_associative(t))?.expect("order 5 has nonassociative loops");
    print!("G:\n{}", text::emit(&g));

    let q = isotopy::principal_isotope(&g, 2, 3)?;
    println!("principal isotope (2, 3) has identity {:?}", q.identity_element());
    let (h, t) = isotopy::principal_loop_isotope(&g, 2, 3)?;
    print!("normalized:\n{}", text::emit(&h));
    println!("isotopism {t}");
    println!("isomorphic to G: {}", isotopy::find_isomorphism(&g, &h).is_some());
    println!("AUT invariant: {}  Phi invariant: {}", isotopy::aut_invariance_check(&g, 2, 3)?, isotopy::phi_invariance_check(&g, 2, 3)?);

    let z4 = loopkit::groups::cyclic(4);
    for (h, t, p) in isotopy::shaped_principal_isotopes(&z4, Side::Left) {
        let r = isotopy::isotope_harness(&z4, &h, &t, Side::Left, IsotopeStatement::Theorem)?;
        println!("Z4, a = {p}: {:?} (failed hypothesis: {:?})", r.verdict, r.failed_hypothesis);
    }
    Ok(())
}
