//! Translation representations `Π_λ = {L_x}` and `Π_ρ = {R_x}` and the
//! closure conditions on them that characterize LC-, RC- and centrum square
//! loops.
//!
//! All composites are read left to right (see [`crate::perm`]): `R_{y²} R_z`
//! applies `R_{y²}` first.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::props;
use crate::table::{LoopTable, Side};

/// A set of permutations of common degree, with membership by image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSet {
    degree: usize,
    members: BTreeSet<Perm>,
}

impl PermSet {
    pub fn new(degree: usize, perms: impl IntoIterator<Item = Perm>) -> Result<Self> {
        let mut members = BTreeSet::new();
        for p in perms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: p.degree() });
            }
            members.insert(p);
        }
        Ok(PermSet { degree, members })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.members.iter()
    }
}

pub fn pi_lambda(l: &LoopTable) -> PermSet {
    PermSet { degree: l.order(), members: l.elements().map(|x| l.lt(x)).collect() }
}

pub fn pi_rho(l: &LoopTable) -> PermSet {
    PermSet { degree: l.order(), members: l.elements().map(|x| l.rt(x)).collect() }
}

/// Checks the three axioms of a loop representation: contains the identity;
/// for every `x, y` exactly one member sends `x` to `y`; and `αβ⁻¹` fixing a
/// point forces `α = β`.
pub fn is_representation(s: &PermSet) -> bool {
    let n = s.degree;
    if s.is_empty() || !s.contains(&Perm::identity(n)) {
        return false;
    }
    let transitive_uniquely = (0..n).all(|x| {
        (0..n).all(|y| s.iter().filter(|p| p.apply(x) == y).count() == 1)
    });
    let sharply = s.iter().all(|a| {
        s.iter().all(|b| {
            let q = a.then(&b.inverse());
            a == b || (0..n).all(|x| q.apply(x) != x)
        })
    });
    transitive_uniquely && sharply
}

struct Translations {
    left: Vec<Perm>,
    right: Vec<Perm>,
}

impl Translations {
    fn of(l: &LoopTable) -> Self {
        Translations {
            left: l.elements().map(|x| l.lt(x)).collect(),
            right: l.elements().map(|x| l.rt(x)).collect(),
        }
    }

    /// Translations on `side`, and on the opposite side.
    fn by(&self, side: Side) -> (&[Perm], &[Perm]) {
        match side {
            Side::Left => (&self.left, &self.right),
            Side::Right => (&self.right, &self.left),
        }
    }
}

fn all_pairs(l: &LoopTable, f: impl Fn(usize, usize) -> bool) -> bool {
    l.elements().all(|a| l.elements().all(|b| f(a, b)))
}

/// Left: `R_{y²} R_z = R_{y·yz}` for all `y, z`.
/// Right: `L_{y²} L_z = L_{zy·y}` for all `y, z`.
pub fn lemma_0_1_closure(l: &LoopTable, side: Side) -> bool {
    let t = Translations::of(l);
    let m = |a, b| l.mul(a, b);
    all_pairs(l, |y, z| match side {
        Side::Left => &t.right[l.square(y)] * &t.right[z] == t.right[m(y, m(y, z))],
        Side::Right => &t.left[l.square(y)] * &t.left[z] == t.left[m(m(z, y), y)],
    })
}

/// Left: `R_z L_x² = L_x² R_z` for all `x, z`.
/// Right: `L_z R_x² = R_x² L_z` for all `x, z`.
pub fn lemma_0_2_commutation(l: &LoopTable, side: Side) -> bool {
    let t = Translations::of(l);
    // `sq` holds the squared translations named in the statement; `other`
    // the ones they must commute with.
    let (other, sq) = match side {
        Side::Left => (&t.right, &t.left),
        Side::Right => (&t.left, &t.right),
    };
    all_pairs(l, |x, z| {
        let s = &sq[x] * &sq[x];
        &other[z] * &s == &s * &other[z]
    })
}

/// Left: `L_y² L_x ∈ Π_λ` for all `x, y`. Right: `R_y² R_x ∈ Π_ρ`.
pub fn theorem_0_3_closure(l: &LoopTable, side: Side) -> bool {
    let t = Translations::of(l);
    let (own, _) = t.by(side);
    let set: BTreeSet<&Perm> = own.iter().collect();
    all_pairs(l, |x, y| set.contains(&(&(&own[y] * &own[y]) * &own[x])))
}

/// Whether an evaluation ran with its standing hypothesis bypassed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Enforce,
    Bypass,
}

/// A boolean result that may carry a caveat: `hypothesis_bypassed` is set
/// when the standing hypothesis failed and evaluation was forced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub value: bool,
    pub hypothesis_bypassed: bool,
}

/// Left: `R_z R_{y²} = R_{y·yz}` for all `y, z`; Right: `L_z L_{y²} = L_{zy·y}`.
///
/// This pins the partner translation to the one forced by the LC (RC)
/// identity. Read as bare membership (`R_z R_{y²} ∈ Π_ρ`) the condition is
/// satisfied by every group, including ones that are not centrum square;
/// see [`theorem_0_4_membership`].
///
/// Requires an LC-loop (Left) or RC-loop (Right) unless `Hypothesis::Bypass`.
pub fn theorem_0_4_closure(l: &LoopTable, side: Side, hypothesis: Hypothesis) -> Result<Evaluation> {
    let met = match side {
        Side::Left => props::is_lc(l),
        Side::Right => props::is_rc(l),
    };
    if !met && hypothesis == Hypothesis::Enforce {
        return Err(Error::HypothesisNotMet(match side {
            Side::Left => "loop is not an LC-loop",
            Side::Right => "loop is not an RC-loop",
        }));
    }
    Ok(Evaluation { value: theorem_0_4_form(l, side), hypothesis_bypassed: !met })
}

fn theorem_0_4_form(l: &LoopTable, side: Side) -> bool {
    let t = Translations::of(l);
    let m = |a, b| l.mul(a, b);
    all_pairs(l, |y, z| match side {
        Side::Left => &t.right[z] * &t.right[l.square(y)] == t.right[m(y, m(y, z))],
        Side::Right => &t.left[z] * &t.left[l.square(y)] == t.left[m(m(z, y), y)],
    })
}

/// Left: `R_z R_{y²} ∈ Π_ρ` for all `y, z`; Right: `L_z L_{y²} ∈ Π_λ`.
pub fn theorem_0_4_membership(l: &LoopTable, side: Side) -> bool {
    let t = Translations::of(l);
    let (own, _) = t.by(side.dual());
    let set: BTreeSet<&Perm> = own.iter().collect();
    all_pairs(l, |y, z| set.contains(&(&own[z] * &own[l.square(y)])))
}

/// Conjunction of the two closure conditions characterizing centrum square
/// LC (RC) loops: the [`theorem_0_4_closure`] form and the
/// [`lemma_0_1_closure`] form.
pub fn corollary_0_5_check(l: &LoopTable, side: Side) -> bool {
    theorem_0_4_form(l, side) && lemma_0_1_closure(l, side)
}
