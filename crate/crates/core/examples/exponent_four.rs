//! The exponent-4 conditions on C-loops: which loops meet them, their
//! exponents, and the right inner maps that must vanish.
//!
//!     cargo run --release --example exponent_four

use loopkit::autotopy;
use loopkit::enumerate::EnumerationJob;
use loopkit::{props, text};

fn main() -> loopkit::Result<()> {
    for n in 1..=6 {
        for l in EnumerationJob::new(n).collect_par()? {
            let Some((first, second)) = autotopy::exp4_conditions(&l) else { continue };
            if !(first || second) {
                continue;
            }
            let e = l.exponent().expect("finite loop");
            println!(
                "conditions ({first}, {second})  C {}  exponent {}  central square {}  nontrivial R(x,y) {:?}",
                props::is_c(&l),
                e.value,
                props::is_central_square(&l),
                autotopy::nontrivial_right_inner_map(&l),
            );
            print!("{}", text::emit(&l));
        }
    }
    Ok(())
}
