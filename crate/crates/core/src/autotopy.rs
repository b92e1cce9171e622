//! Autotopisms, μ-regular bijections and the specific triples built from
//! translations and the inversion map `J`.
//!
//! A triple `(U, V, W)` is an autotopism of `L` when `xU · yV = (x·y)W` for
//! all `x, y`. Triples compose and invert componentwise, left to right.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{lcm, GroupElement, Perm};
use crate::table::{LoopTable, Side};

/// Largest order for which [`autotopism_group`] and [`mu_regular_set`] run
/// by default. Both scan all `n!` candidate first components.
pub const DEFAULT_AUT_CAP: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub u: Perm,
    pub v: Perm,
    pub w: Perm,
}

impl Triple {
    pub fn new(u: Perm, v: Perm, w: Perm) -> Result<Self> {
        let n = u.degree();
        for p in [&v, &w] {
            if p.degree() != n {
                return Err(Error::DegreeMismatch { expected: n, found: p.degree() });
            }
        }
        Ok(Triple { u, v, w })
    }

    pub fn identity(n: usize) -> Self {
        Triple { u: Perm::identity(n), v: Perm::identity(n), w: Perm::identity(n) }
    }

    pub fn degree(&self) -> usize {
        self.u.degree()
    }

    pub fn then(&self, other: &Triple) -> Triple {
        Triple { u: self.u.then(&other.u), v: self.v.then(&other.v), w: self.w.then(&other.w) }
    }

    pub fn inverse(&self) -> Triple {
        Triple { u: self.u.inverse(), v: self.v.inverse(), w: self.w.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_identity() && self.v.is_identity() && self.w.is_identity()
    }

    pub fn order(&self) -> u64 {
        lcm(lcm(self.u.order(), self.v.order()), self.w.order())
    }
}

impl GroupElement for Triple {
    fn compose(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn invert(&self) -> Self {
        self.inverse()
    }
    fn is_neutral(&self) -> bool {
        self.is_identity()
    }
    fn element_order(&self) -> u64 {
        self.order()
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.u, self.v, self.w)
    }
}

/// The three image arrays separated by spaces.
impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.u, self.v, self.w)
    }
}

fn check_degree(l: &LoopTable, t: &Triple) -> Result<()> {
    if t.degree() != l.order() {
        return Err(Error::DegreeMismatch { expected: l.order(), found: t.degree() });
    }
    Ok(())
}

fn check_element(l: &LoopTable, x: usize) -> Result<()> {
    if x >= l.order() {
        return Err(Error::IndexOutOfRange { index: x, order: l.order() });
    }
    Ok(())
}

/// First pair `(x, y)` with `xU · yV ≠ (x·y)W`.
pub fn autotopism_witness(l: &LoopTable, t: &Triple) -> Result<Option<(usize, usize)>> {
    check_degree(l, t)?;
    Ok(first_failure(l, t))
}

fn first_failure(l: &LoopTable, t: &Triple) -> Option<(usize, usize)> {
    let (u, v, w) = (t.u.raw(), t.v.raw(), t.w.raw());
    for x in l.elements() {
        for y in l.elements() {
            if l.mul(u[x] as usize, v[y] as usize) != w[l.mul(x, y)] as usize {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_autotopism(l: &LoopTable, t: &Triple) -> Result<bool> {
    Ok(autotopism_witness(l, t)?.is_none())
}

fn check_cap(l: &LoopTable, cap: usize) -> Result<()> {
    if l.order() > cap {
        return Err(Error::OrderTooLarge { order: l.order(), max: cap });
    }
    Ok(())
}

/// `AUT(L)`, sorted by `(U, V, W)`, for `n ≤` [`DEFAULT_AUT_CAP`].
pub fn autotopism_group(l: &LoopTable) -> Result<Vec<Triple>> {
    autotopism_group_with_cap(l, DEFAULT_AUT_CAP)
}

/// Putting `y = e` in the defining equation forces `W = U R_c` with
/// `c = eV`, and putting `x = e` forces `V = W L_{eU}⁻¹`. So the group is
/// found by running `U` over `SYM(n)` and `c` over `L`, rebuilding `V, W`
/// and checking the remaining equations.
pub fn autotopism_group_with_cap(l: &LoopTable, cap: usize) -> Result<Vec<Triple>> {
    check_cap(l, cap)?;
    let n = l.order();
    let right: Vec<Perm> = l.elements().map(|c| l.rt(c)).collect();
    let left_inv: Vec<Perm> = l.elements().map(|a| l.lt(a).inverse()).collect();
    let candidates: Vec<Perm> = Perm::all(n).collect();
    let mut group: Vec<Triple> = candidates
        .par_iter()
        .flat_map_iter(|u| {
            let right = &right;
            let left_inv = &left_inv;
            (0..n).filter_map(move |c| {
                let w = u.then(&right[c]);
                let v = w.then(&left_inv[u.apply(0)]);
                let t = Triple { u: u.clone(), v, w };
                first_failure(l, &t).is_none().then_some(t)
            })
        })
        .collect();
    group.sort();
    Ok(group)
}

/// A μ-regular bijection `U` with its adjoint `U' = V`: `xU · y = x · yV`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MuRegularEntry {
    u: Perm,
    adjoint: Perm,
}

impl MuRegularEntry {
    /// `None` unless `xU · y = x · yV` holds for all `x, y`.
    pub fn new(l: &LoopTable, u: Perm, adjoint: Perm) -> Option<Self> {
        (u.degree() == l.order()
            && adjoint.degree() == l.order()
            && is_mu_regular_pair(l, &u, &adjoint))
        .then_some(MuRegularEntry { u, adjoint })
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    pub fn adjoint(&self) -> &Perm {
        &self.adjoint
    }
}

/// `xU · y = x · yV` for all `x, y`.
pub fn is_mu_regular_pair(l: &LoopTable, u: &Perm, v: &Perm) -> bool {
    l.elements().all(|x| l.elements().all(|y| l.mul(u.apply(x), y) == l.mul(x, v.apply(y))))
}

/// `Φ(L)` with adjoints, sorted by `U`. Setting `x = e` forces the adjoint
/// to be `L_{eU}`, so only `U` is searched.
pub fn mu_regular_set(l: &LoopTable) -> Result<Vec<MuRegularEntry>> {
    mu_regular_set_with_cap(l, DEFAULT_AUT_CAP)
}

pub fn mu_regular_set_with_cap(l: &LoopTable, cap: usize) -> Result<Vec<MuRegularEntry>> {
    check_cap(l, cap)?;
    let candidates: Vec<Perm> = Perm::all(l.order()).collect();
    Ok(candidates
        .into_par_iter()
        .filter_map(|u| {
            let adjoint = l.lt(u.apply(0));
            is_mu_regular_pair(l, &u, &adjoint).then_some(MuRegularEntry { u, adjoint })
        })
        .collect())
}

/// Left: `(R_{y²}, L_y^{-2}, I)`. Right: `(R_y², L_{y²}^{-1}, I)`.
///
/// `L_y^{-2}` is the inverse of `L_y L_y`; `L_{y²}^{-1}` the inverse of the
/// translation by the element `y·y`. They differ outside power-associative
/// settings.
pub fn thm_1_1_triple(l: &LoopTable, y: usize, side: Side) -> Result<Triple> {
    check_element(l, y)?;
    let n = l.order();
    let y2 = l.square(y);
    Ok(match side {
        Side::Left => Triple {
            u: l.rt(y2),
            v: (&l.lt(y) * &l.lt(y)).inverse(),
            w: Perm::identity(n),
        },
        Side::Right => Triple {
            u: &l.rt(y) * &l.rt(y),
            v: l.lt(y2).inverse(),
            w: Perm::identity(n),
        },
    })
}

/// Left: `(R_{y²} L_x², L_y^{-2}, L_x²)`, the product of the Left
/// [`thm_1_1_triple`] with `(L_x², I, L_x²)`.
/// Right: `(R_y², L_{y²}^{-1} R_x², R_x²)`, the product with `(I, R_x², R_x²)`.
pub fn cor_1_2_triple(l: &LoopTable, x: usize, y: usize, side: Side) -> Result<Triple> {
    check_element(l, x)?;
    let base = thm_1_1_triple(l, y, side)?;
    let n = l.order();
    let step = match side {
        Side::Left => {
            let lx2 = &l.lt(x) * &l.lt(x);
            Triple { u: lx2.clone(), v: Perm::identity(n), w: lx2 }
        }
        Side::Right => {
            let rx2 = &l.rt(x) * &l.rt(x);
            Triple { u: Perm::identity(n), v: rx2.clone(), w: rx2 }
        }
    };
    Ok(base.then(&step))
}

/// The two triples `(I, L_z², J L_z² J)` and `(R_z², I, J R_z² J)`.
pub fn exp4_condition_triples(l: &LoopTable, z: usize) -> Result<(Triple, Triple)> {
    let j = l.j_map()?;
    check_element(l, z)?;
    let n = l.order();
    let lz2 = &l.lt(z) * &l.lt(z);
    let rz2 = &l.rt(z) * &l.rt(z);
    let first = Triple { u: Perm::identity(n), v: lz2.clone(), w: &(&j * &lz2) * &j };
    let second = Triple { u: rz2.clone(), v: Perm::identity(n), w: &(&j * &rz2) * &j };
    Ok((first, second))
}

/// Whether both [`exp4_condition_triples`] are autotopisms for every `z`,
/// reported separately. `None` when `J` is undefined.
pub fn exp4_conditions(l: &LoopTable) -> Option<(bool, bool)> {
    l.j_map().ok()?;
    let mut first = true;
    let mut second = true;
    for z in l.elements() {
        let (a, b) = exp4_condition_triples(l, z).ok()?;
        first &= first_failure(l, &a).is_none();
        second &= first_failure(l, &b).is_none();
    }
    Some((first, second))
}

fn conj_j(l: &LoopTable, p: &Perm) -> Result<Perm> {
    let j = l.j_map()?;
    Ok(&(&j * p) * &j)
}

/// `A_ρ = (V, U, JWJ)`.
pub fn transform_rho(l: &LoopTable, t: &Triple) -> Result<Triple> {
    check_degree(l, t)?;
    Ok(Triple { u: t.v.clone(), v: t.u.clone(), w: conj_j(l, &t.w)? })
}

/// `A_μ = (W, JVJ, U)`.
pub fn transform_mu(l: &LoopTable, t: &Triple) -> Result<Triple> {
    check_degree(l, t)?;
    Ok(Triple { u: t.w.clone(), v: conj_j(l, &t.v)?, w: t.u.clone() })
}

/// `A_λ = (JUJ, W, V)`.
pub fn transform_lambda(l: &LoopTable, t: &Triple) -> Result<Triple> {
    check_degree(l, t)?;
    Ok(Triple { u: conj_j(l, &t.u)?, v: t.w.clone(), w: t.v.clone() })
}

/// `R(x, y) = R_x R_y R_{xy}⁻¹`.
pub fn right_inner_map(l: &LoopTable, x: usize, y: usize) -> Result<Perm> {
    check_element(l, x)?;
    check_element(l, y)?;
    Ok(&(&l.rt(x) * &l.rt(y)) * &l.rt(l.mul(x, y)).inverse())
}

/// First `(x, y)` with `R(x, y) ≠ I`.
pub fn nontrivial_right_inner_map(l: &LoopTable) -> Option<(usize, usize)> {
    l.elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .find(|&(x, y)| !right_inner_map(l, x, y).unwrap().is_identity())
}
