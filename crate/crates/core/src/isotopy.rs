//! Isotopes, normalization back to loops, and isotopy-invariance checks.
//!
//! An isotopism `(U, V, W)` from `(G, ·)` to `(H, ∘)` satisfies
//! `xU ∘ yV = (x·y)W`. Both loops live on the same label set `{0..n-1}`.

use crate::autotopy::{self, Triple};
use crate::error::{Error, Result};
use crate::perm::{order_multiset, Perm};
use crate::props;
use crate::table::{check_latin, check_square, LoopTable, Side};

/// A Latin square with no identity requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasigroupTable {
    n: usize,
    cells: Vec<u8>,
    origin: String,
}

impl QuasigroupTable {
    pub fn from_rows(rows: &[Vec<usize>], origin: impl Into<String>) -> Result<Self> {
        let cells = check_square(rows)?;
        check_latin(rows.len(), &cells)?;
        Ok(QuasigroupTable { n: rows.len(), cells, origin: origin.into() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// The two-sided identity, if there is one.
    pub fn identity_element(&self) -> Option<usize> {
        (0..self.n).find(|&u| (0..self.n).all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }
}

impl From<&LoopTable> for QuasigroupTable {
    fn from(l: &LoopTable) -> Self {
        QuasigroupTable { n: l.order(), cells: l.cells().to_vec(), origin: "loop".into() }
    }
}

/// `a ∘ b = ((a U⁻¹)·(b V⁻¹)) W`, the table that makes `t` an isotopism
/// from `l`.
pub fn isotope(l: &LoopTable, t: &Triple) -> Result<QuasigroupTable> {
    if t.degree() != l.order() {
        return Err(Error::DegreeMismatch { expected: l.order(), found: t.degree() });
    }
    let n = l.order();
    let (ui, vi) = (t.u.inverse(), t.v.inverse());
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| t.w.apply(l.mul(ui.apply(a), vi.apply(b)))).collect())
        .collect();
    QuasigroupTable::from_rows(&rows, format!("isotope by ({t:?})"))
}

/// `x ∘ y = (x R_a⁻¹)·(y L_b⁻¹)`, whose identity is `b·a`.
pub fn principal_isotope(l: &LoopTable, a: usize, b: usize) -> Result<QuasigroupTable> {
    let ra = l.right_translation(a)?;
    let lb = l.left_translation(b)?;
    let t = Triple { u: ra, v: lb, w: Perm::identity(l.order()) };
    let mut q = isotope(l, &t)?;
    q.origin = format!("principal isotope (a={a}, b={b})");
    debug_assert_eq!(q.identity_element(), Some(l.mul(b, a)));
    Ok(q)
}

/// Swaps labels `0` and the identity `u` so that `0` becomes the identity.
/// Returns the loop and the relabelling `σ`, so that `σ` is an isomorphism
/// from `q` onto the result.
pub fn normalize_with_relabel(q: &QuasigroupTable) -> Option<(LoopTable, Perm)> {
    let u = q.identity_element()?;
    let n = q.order();
    let mut img: Vec<usize> = (0..n).collect();
    img.swap(0, u);
    let sigma = Perm::from_images(&img).expect("transposition");
    // σ is an involution: (σx)∘'(σy) = σ(x∘y)  ⇔  a∘'b = σ(σa ∘ σb)
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| sigma.apply(q.mul(sigma.apply(a), sigma.apply(b)))).collect())
        .collect();
    let l = LoopTable::from_rows(&rows).expect("relabelled quasigroup with identity is a loop");
    Some((l, sigma))
}

pub fn normalize_to_loop(q: &QuasigroupTable) -> Option<LoopTable> {
    normalize_with_relabel(q).map(|(l, _)| l)
}

/// The principal isotope of `l` at `(a, b)` as a loop, together with the
/// isotopism `(R_a σ, L_b σ, σ)` from `l` onto it.
pub fn principal_loop_isotope(l: &LoopTable, a: usize, b: usize) -> Result<(LoopTable, Triple)> {
    let q = principal_isotope(l, a, b)?;
    let (h, sigma) = normalize_with_relabel(&q).expect("principal isotopes have an identity");
    let t = Triple { u: &l.rt(a) * &sigma, v: &l.lt(b) * &sigma, w: sigma };
    Ok((h, t))
}

/// An isomorphism `φ` from `a` onto `b` (`(xy)φ = xφ·yφ`), by backtracking
/// over images with every determined product checked as soon as both
/// factors are assigned.
pub fn find_isomorphism(a: &LoopTable, b: &LoopTable) -> Option<Perm> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[0] = 0;
    used[0] = true;

    // Elements 0..=k are assigned; check every product involving k.
    fn consistent(a: &LoopTable, b: &LoopTable, phi: &[usize], used: &[bool], k: usize) -> bool {
        (0..=k).all(|x| {
            [(x, k), (k, x)].into_iter().all(|(p, q)| {
                let prod = a.mul(p, q);
                let target = b.mul(phi[p], phi[q]);
                if prod <= k {
                    phi[prod] == target
                } else {
                    !used[target]
                }
            })
        })
    }

    fn go(a: &LoopTable, b: &LoopTable, phi: &mut Vec<usize>, used: &mut Vec<bool>, k: usize) -> bool {
        let n = a.order();
        if k == n {
            return true;
        }
        for v in 1..n {
            if used[v] {
                continue;
            }
            phi[k] = v;
            used[v] = true;
            if consistent(a, b, phi, used, k) && go(a, b, phi, used, k + 1) {
                return true;
            }
            used[v] = false;
        }
        phi[k] = usize::MAX;
        false
    }

    if n == 1 {
        return Some(Perm::identity(1));
    }
    if go(a, b, &mut phi, &mut used, 1) {
        let p = Perm::from_images(&phi).expect("bijection");
        debug_assert!(a.elements().all(|x| a.elements().all(|y| p.apply(a.mul(x, y)) == b.mul(p.apply(x), p.apply(y)))));
        Some(p)
    } else {
        None
    }
}

/// Compares `|AUT|` and the multiset of element orders of `AUT` between `l`
/// and its normalized principal isotope at `(a, b)`.
pub fn aut_invariance_check(l: &LoopTable, a: usize, b: usize) -> Result<bool> {
    let (h, _) = principal_loop_isotope(l, a, b)?;
    let g_aut = autotopy::autotopism_group(l)?;
    let h_aut = autotopy::autotopism_group(&h)?;
    Ok(g_aut.len() == h_aut.len() && order_multiset(&g_aut) == order_multiset(&h_aut))
}

/// As [`aut_invariance_check`] for `Φ` and for the set of adjoints `Φ*`.
pub fn phi_invariance_check(l: &LoopTable, a: usize, b: usize) -> Result<bool> {
    let (h, _) = principal_loop_isotope(l, a, b)?;
    let summarize = |t: &LoopTable| -> Result<_> {
        let phi = autotopy::mu_regular_set(t)?;
        let us: Vec<Perm> = phi.iter().map(|e| e.u().clone()).collect();
        let mut adj: Vec<Perm> = phi.iter().map(|e| e.adjoint().clone()).collect();
        adj.sort();
        adj.dedup();
        Ok((us.len(), order_multiset(&us), adj.len(), order_multiset(&adj)))
    };
    Ok(summarize(l)? == summarize(&h)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarnessVerdict {
    Holds,
    Violated,
    Vacuous,
}

/// Hypothesis and conclusion flags for one instance of the C-loop isotope
/// theorem. `failed_hypothesis` names the first hypothesis that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub hypotheses_met: bool,
    pub failed_hypothesis: Option<&'static str>,
    pub conclusion: bool,
    pub verdict: HarnessVerdict,
}

/// Which form of the isotope statement to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotopeStatement {
    /// Central square LC (Left) / RC (Right) loop `G`.
    Theorem,
    /// Central square left alternative RC (Left) / right alternative LC
    /// (Right) loop `G`.
    Corollary,
}

/// Left: `t = (A, B, B)`; Right: `t = (A, B, A)`. Hypotheses: `t` is an
/// isotopism of `G` onto `H`, `G` satisfies the side's loop condition and is
/// central square, `H` is alternative and central square. Conclusion: `H`
/// is a C-loop.
pub fn thm_1_5_harness(g: &LoopTable, h: &LoopTable, t: &Triple, side: Side) -> Result<HarnessReport> {
    isotope_harness(g, h, t, side, IsotopeStatement::Theorem)
}

pub fn isotope_harness(
    g: &LoopTable,
    h: &LoopTable,
    t: &Triple,
    side: Side,
    statement: IsotopeStatement,
) -> Result<HarnessReport> {
    for n in [h.order(), t.degree()] {
        if n != g.order() {
            return Err(Error::DegreeMismatch { expected: g.order(), found: n });
        }
    }
    let shape_ok = match side {
        Side::Left => t.v == t.w,
        Side::Right => t.u == t.w,
    };
    let is_isotopism = || {
        g.elements().all(|x| {
            g.elements().all(|y| h.mul(t.u.apply(x), t.v.apply(y)) == t.w.apply(g.mul(x, y)))
        })
    };
    let g_condition = || match (statement, side) {
        (IsotopeStatement::Theorem, Side::Left) => props::is_lc(g),
        (IsotopeStatement::Theorem, Side::Right) => props::is_rc(g),
        (IsotopeStatement::Corollary, Side::Left) => props::is_rc(g) && props::is_left_alternative(g),
        (IsotopeStatement::Corollary, Side::Right) => props::is_lc(g) && props::is_right_alternative(g),
    };

    let checks: [(&'static str, &dyn Fn() -> bool); 6] = [
        ("triple shape", &|| shape_ok),
        ("triple is an isotopism of G onto H", &is_isotopism),
        ("G satisfies the side's loop identity", &g_condition),
        ("G is central square", &|| props::is_central_square(g)),
        ("H is alternative", &|| props::is_left_alternative(h) && props::is_right_alternative(h)),
        ("H is central square", &|| props::is_central_square(h)),
    ];
    let failed_hypothesis = checks.iter().find(|(_, f)| !f()).map(|(name, _)| *name);
    let hypotheses_met = failed_hypothesis.is_none();
    let conclusion = props::is_c(h);
    let verdict = match (hypotheses_met, conclusion) {
        (false, _) => HarnessVerdict::Vacuous,
        (true, true) => HarnessVerdict::Holds,
        (true, false) => HarnessVerdict::Violated,
    };
    Ok(HarnessReport { hypotheses_met, failed_hypothesis, conclusion, verdict })
}

/// Isotopisms of shape `(A, B, B)` (Left) or `(A, B, A)` (Right) onto
/// normalized principal isotopes of `g`: `b = 0` on the Left, `a = 0` on the
/// Right. Each item is the target loop, the triple and the free parameter.
pub fn shaped_principal_isotopes(g: &LoopTable, side: Side) -> Vec<(LoopTable, Triple, usize)> {
    g.elements()
        .map(|p| {
            let (a, b) = match side {
                Side::Left => (p, 0),
                Side::Right => (0, p),
            };
            let (h, t) = principal_loop_isotope(g, a, b).expect("in range");
            (h, t, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, klein, symmetric};

    #[test]
    fn identity_isotope_is_the_loop() {
        let z4 = cyclic(4);
        let q = isotope(&z4, &Triple::identity(4)).unwrap();
        assert_eq!(normalize_to_loop(&q).unwrap(), z4);
        assert_eq!(principal_isotope(&z4, 0, 0).unwrap().rows(), z4.rows());
    }

    #[test]
    fn principal_isotope_identity_is_ba() {
        let s3 = symmetric(3);
        for a in 0..6 {
            for b in 0..6 {
                let q = principal_isotope(&s3, a, b).unwrap();
                assert_eq!(q.identity_element(), Some(s3.mul(b, a)));
            }
        }
    }

    #[test]
    fn principal_isotope_of_z4_is_z4() {
        let z4 = cyclic(4);
        let q = principal_isotope(&z4, 1, 2).unwrap();
        assert_eq!(q.identity_element(), Some(3));
        let h = normalize_to_loop(&q).unwrap();
        assert!(find_isomorphism(&h, &z4).is_some());
        assert!(find_isomorphism(&klein(), &z4).is_none());
    }

    #[test]
    fn normalization() {
        let q = QuasigroupTable::from_rows(&[vec![1, 0], vec![0, 1]], "test").unwrap();
        assert_eq!(normalize_to_loop(&q).unwrap(), cyclic(2));
        // Column 0 reads 0, 2, 1, so no element acts as a two-sided identity.
        let q = QuasigroupTable::from_rows(&[vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]], "test").unwrap();
        assert_eq!(q.identity_element(), None);
        assert_eq!(normalize_to_loop(&q), None);
        assert!(QuasigroupTable::from_rows(&[vec![0, 1], vec![0, 1]], "bad").is_err());
    }

    #[test]
    fn principal_loop_isotope_triple_is_an_isotopism() {
        let s3 = symmetric(3);
        for (a, b) in [(1, 2), (3, 0), (5, 5)] {
            let (h, t) = principal_loop_isotope(&s3, a, b).unwrap();
            for x in 0..6 {
                for y in 0..6 {
                    assert_eq!(h.mul(t.u.apply(x), t.v.apply(y)), t.w.apply(s3.mul(x, y)));
                }
            }
        }
    }

    #[test]
    fn invariance_on_z4() {
        let z4 = cyclic(4);
        for a in 0..4 {
            for b in 0..4 {
                assert!(aut_invariance_check(&z4, a, b).unwrap());
                assert!(phi_invariance_check(&z4, a, b).unwrap());
            }
        }
    }

    #[test]
    fn harness_examples() {
        let z4 = cyclic(4);
        let r = thm_1_5_harness(&z4, &z4, &Triple::identity(4), Side::Left).unwrap();
        assert_eq!(r.verdict, HarnessVerdict::Holds);
        let bad = Triple::new(Perm::identity(4), Perm::identity(4), "1,0,3,2".parse().unwrap()).unwrap();
        let r = thm_1_5_harness(&z4, &z4, &bad, Side::Left).unwrap();
        assert_eq!(r.verdict, HarnessVerdict::Vacuous);
        assert_eq!(r.failed_hypothesis, Some("triple shape"));
        // S3 is an LC-loop but not central square.
        let s3 = symmetric(3);
        let r = thm_1_5_harness(&s3, &s3, &Triple::identity(6), Side::Right).unwrap();
        assert_eq!(r.failed_hypothesis, Some("G is central square"));
        for side in [Side::Left, Side::Right] {
            for (h, t, _) in shaped_principal_isotopes(&z4, side) {
                let r = thm_1_5_harness(&z4, &h, &t, side).unwrap();
                assert_eq!(r.verdict, HarnessVerdict::Holds, "{side} {t:?}");
            }
        }
    }
}
