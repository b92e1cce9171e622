//! Autotopism groups, mu-regular bijections and the C-loop transforms.
//!
//!     cargo run --release --example autotopisms

use loopkit::autotopy::{self, Triple};
use loopkit::groups::{cyclic, klein};
use loopkit::perm::{is_subgroup, order_multiset};
use loopkit::{LoopTable, Side};

fn summary(name: &str, l: &LoopTable) -> loopkit::Result<()> {
    let aut = autotopy::autotopism_group(l)?;
    let phi = autotopy::mu_regular_set(l)?;
    println!("{name}: |AUT| = {}, orders {:?}, group {}", aut.len(), order_multiset(&aut), is_subgroup(&aut));
    println!("  |Phi| = {}", phi.len());

    let t = autotopy::thm_1_1_triple(l, 1, Side::Left)?;
    println!("  (R_(y^2), L_y^-2, I) at y = 1: {t}  autotopism: {}", autotopy::is_autotopism(l, &t)?);

    let mu_ok = aut.iter().all(|a| autotopy::transform_mu(l, a).and_then(|m| autotopy::is_autotopism(l, &m)).unwrap());
    let rho_ok = aut.iter().filter(|a| {
        let r: Triple = autotopy::transform_rho(l, a).unwrap();
        !autotopy::is_autotopism(l, &r).unwrap()
    });
    println!("  A_mu always in AUT: {mu_ok};  A with A_rho outside AUT: {}", rho_ok.count());
    Ok(())
}

fn main() -> loopkit::Result<()> {
    summary("Z3", &cyclic(3))?;
    summary("Z4", &cyclic(4))?;
    summary("Z2xZ2", &klein())?;
    for t in autotopy::autotopism_group(&cyclic(2))? {
        println!("{t}");
    }
    Ok(())
}
