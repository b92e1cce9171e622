//! Identity checkers, nuclei, centrum and center.
//!
//! Each [`Property`] is a universally quantified equation in at most three
//! variables. A check scans all tuples `(x, y, z)` in lexicographic order and
//! reports the first one that falsifies the equation, so witnesses are
//! deterministic. No checker leans on another.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::tuples;
use crate::table::LoopTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// `(xx)(yz) = (x(xy))z`
    Lc,
    /// `(zy)(xx) = z((yx)x)`
    Rc,
    /// `x(y(yz)) = ((xy)y)z`
    C,
    /// `x(y·yz) = (x·yy)z`
    LcVariant1,
    /// `x(x·yz) = (x·xy)z`
    LcVariant2,
    /// `(zy·y)x = z(yy·x)`
    RcVariant1,
    /// `(zy·x)x = z(yx·x)`
    RcVariant2,
    /// `x·xy = x²y`
    LeftAlternative,
    /// `yx·x = yx²`
    RightAlternative,
    /// `x(yx) = (xy)x`
    Flexible,
    /// `x^λ(xy) = y`
    Lip,
    /// `(yx)x^ρ = y`
    Rip,
    Ip,
    /// `x²` commutes with every `y`.
    CentrumSquare,
    /// `x²` lies in the center.
    CentralSquare,
    /// `x²` lies in the nucleus.
    NuclearSquare,
    /// `(xy)² = (yx)²`
    SquaresCommute,
    /// `(xy)³ = y³x³`
    CubeAntiautomorphism,
    /// `(xy)z = x(yz)`
    Associative,
}

impl Property {
    pub const ALL: [Property; 19] = [
        Property::Lc,
        Property::Rc,
        Property::C,
        Property::LcVariant1,
        Property::LcVariant2,
        Property::RcVariant1,
        Property::RcVariant2,
        Property::LeftAlternative,
        Property::RightAlternative,
        Property::Flexible,
        Property::Lip,
        Property::Rip,
        Property::Ip,
        Property::CentrumSquare,
        Property::CentralSquare,
        Property::NuclearSquare,
        Property::SquaresCommute,
        Property::CubeAntiautomorphism,
        Property::Associative,
    ];

    /// The properties the CLI evaluates when none are named.
    pub const DEFAULT_REPORT: [Property; 13] = [
        Property::Lc,
        Property::Rc,
        Property::C,
        Property::LeftAlternative,
        Property::RightAlternative,
        Property::Flexible,
        Property::Lip,
        Property::Rip,
        Property::Ip,
        Property::CentrumSquare,
        Property::CentralSquare,
        Property::NuclearSquare,
        Property::Associative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Lc => "lc",
            Property::Rc => "rc",
            Property::C => "c",
            Property::LcVariant1 => "lc1",
            Property::LcVariant2 => "lc2",
            Property::RcVariant1 => "rc1",
            Property::RcVariant2 => "rc2",
            Property::LeftAlternative => "lalt",
            Property::RightAlternative => "ralt",
            Property::Flexible => "flex",
            Property::Lip => "lip",
            Property::Rip => "rip",
            Property::Ip => "ip",
            Property::CentrumSquare => "centrum-square",
            Property::CentralSquare => "central-square",
            Property::NuclearSquare => "nuclear-square",
            Property::SquaresCommute => "squares-commute",
            Property::CubeAntiautomorphism => "cube-anti",
            Property::Associative => "group",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Property::LeftAlternative
            | Property::RightAlternative
            | Property::Flexible
            | Property::Lip
            | Property::Rip
            | Property::Ip
            | Property::CentrumSquare
            | Property::SquaresCommute
            | Property::CubeAntiautomorphism => 2,
            _ => 3,
        }
    }

    /// Evaluates the defining equation at one tuple of length [`Self::arity`].
    pub fn holds_at(self, l: &LoopTable, t: &[usize]) -> bool {
        let m = |a, b| l.mul(a, b);
        let (x, y) = (t[0], t[1]);
        let z = t.get(2).copied().unwrap_or(0);
        match self {
            Property::Lc => m(m(x, x), m(y, z)) == m(m(x, m(x, y)), z),
            Property::Rc => m(m(z, y), m(x, x)) == m(z, m(m(y, x), x)),
            Property::C => m(x, m(y, m(y, z))) == m(m(m(x, y), y), z),
            Property::LcVariant1 => m(x, m(y, m(y, z))) == m(m(x, m(y, y)), z),
            Property::LcVariant2 => m(x, m(x, m(y, z))) == m(m(x, m(x, y)), z),
            Property::RcVariant1 => m(m(m(z, y), y), x) == m(z, m(m(y, y), x)),
            Property::RcVariant2 => m(m(m(z, y), x), x) == m(z, m(m(y, x), x)),
            Property::LeftAlternative => m(x, m(x, y)) == m(m(x, x), y),
            Property::RightAlternative => m(m(y, x), x) == m(y, m(x, x)),
            Property::Flexible => m(x, m(y, x)) == m(m(x, y), x),
            Property::Lip => m(l.linv(x), m(x, y)) == y,
            Property::Rip => m(m(y, x), l.rinv(x)) == y,
            Property::Ip => m(l.linv(x), m(x, y)) == y && m(m(y, x), l.rinv(x)) == y,
            Property::CentrumSquare => {
                let s = l.square(x);
                m(s, y) == m(y, s)
            }
            Property::CentralSquare => {
                let s = l.square(x);
                m(s, y) == m(y, s) && in_all_nuclei_at(l, s, y, z)
            }
            Property::NuclearSquare => in_all_nuclei_at(l, l.square(x), y, z),
            Property::SquaresCommute => l.square(m(x, y)) == l.square(m(y, x)),
            Property::CubeAntiautomorphism => {
                l.pow_left(m(x, y), 3) == m(l.pow_left(y, 3), l.pow_left(x, 3))
            }
            Property::Associative => m(m(x, y), z) == m(x, m(y, z)),
        }
    }

    /// First falsifying tuple in lexicographic order, if any.
    pub fn counterexample(self, l: &LoopTable) -> Option<Vec<usize>> {
        tuples(l.order(), self.arity()).find(|t| !self.holds_at(l, t))
    }

    pub fn holds(self, l: &LoopTable) -> bool {
        self.counterexample(l).is_none()
    }
}

/// `a` associates in the left, middle and right positions for this `(u, v)`.
fn in_all_nuclei_at(l: &LoopTable, a: usize, u: usize, v: usize) -> bool {
    let m = |p, q| l.mul(p, q);
    m(m(a, u), v) == m(a, m(u, v)) && m(m(u, a), v) == m(u, m(a, v)) && m(m(u, v), a) == m(u, m(v, a))
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// Outcome of evaluating several properties on one table. A `None` witness
/// means the property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub results: BTreeMap<Property, Option<Vec<usize>>>,
}

impl PropertyReport {
    pub fn evaluate(l: &LoopTable, props: &[Property]) -> Self {
        PropertyReport { results: props.iter().map(|&p| (p, p.counterexample(l))).collect() }
    }

    pub fn all_hold(&self) -> bool {
        self.results.values().all(Option::is_none)
    }
}

pub fn is_lc(l: &LoopTable) -> bool {
    Property::Lc.holds(l)
}

pub fn is_rc(l: &LoopTable) -> bool {
    Property::Rc.holds(l)
}

pub fn is_c(l: &LoopTable) -> bool {
    Property::C.holds(l)
}

/// The two further LC forms (`form` 1 or 2); see [`Property::LcVariant1`].
pub fn is_lc_variant(l: &LoopTable, form: u8) -> bool {
    match form {
        1 => Property::LcVariant1.holds(l),
        2 => Property::LcVariant2.holds(l),
        _ => panic!("LC variant form must be 1 or 2"),
    }
}

pub fn is_rc_variant(l: &LoopTable, form: u8) -> bool {
    match form {
        1 => Property::RcVariant1.holds(l),
        2 => Property::RcVariant2.holds(l),
        _ => panic!("RC variant form must be 1 or 2"),
    }
}

pub fn is_left_alternative(l: &LoopTable) -> bool {
    Property::LeftAlternative.holds(l)
}

pub fn is_right_alternative(l: &LoopTable) -> bool {
    Property::RightAlternative.holds(l)
}

pub fn is_flexible(l: &LoopTable) -> bool {
    Property::Flexible.holds(l)
}

pub fn is_lip(l: &LoopTable) -> bool {
    Property::Lip.holds(l)
}

pub fn is_rip(l: &LoopTable) -> bool {
    Property::Rip.holds(l)
}

pub fn is_ip(l: &LoopTable) -> bool {
    Property::Ip.holds(l)
}

pub fn is_centrum_square(l: &LoopTable) -> bool {
    Property::CentrumSquare.holds(l)
}

pub fn is_central_square(l: &LoopTable) -> bool {
    Property::CentralSquare.holds(l)
}

pub fn is_nuclear_square(l: &LoopTable) -> bool {
    Property::NuclearSquare.holds(l)
}

pub fn squares_commute_check(l: &LoopTable) -> bool {
    Property::SquaresCommute.holds(l)
}

pub fn cube_antiautomorphism_check(l: &LoopTable) -> bool {
    Property::CubeAntiautomorphism.holds(l)
}

pub fn is_associative(l: &LoopTable) -> bool {
    Property::Associative.holds(l)
}

fn collect(l: &LoopTable, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    l.elements().filter(|&a| keep(a)).collect()
}

fn forall2(l: &LoopTable, f: impl Fn(usize, usize) -> bool) -> bool {
    l.elements().all(|x| l.elements().all(|y| f(x, y)))
}

/// `N_λ = {a : ax·y = a·xy}`.
pub fn nucleus_left(l: &LoopTable) -> Vec<usize> {
    collect(l, |a| forall2(l, |x, y| l.mul(l.mul(a, x), y) == l.mul(a, l.mul(x, y))))
}

/// `N_ρ = {a : y·xa = yx·a}`.
pub fn nucleus_right(l: &LoopTable) -> Vec<usize> {
    collect(l, |a| forall2(l, |x, y| l.mul(y, l.mul(x, a)) == l.mul(l.mul(y, x), a)))
}

/// `N_μ = {a : ya·x = y·ax}`.
pub fn nucleus_middle(l: &LoopTable) -> Vec<usize> {
    collect(l, |a| forall2(l, |x, y| l.mul(l.mul(y, a), x) == l.mul(y, l.mul(a, x))))
}

pub fn nucleus(l: &LoopTable) -> Vec<usize> {
    let (nl, nm, nr) = (nucleus_left(l), nucleus_middle(l), nucleus_right(l));
    nl.into_iter().filter(|a| nm.contains(a) && nr.contains(a)).collect()
}

/// `C = {a : ax = xa}`.
pub fn centrum(l: &LoopTable) -> Vec<usize> {
    collect(l, |a| l.elements().all(|x| l.mul(a, x) == l.mul(x, a)))
}

pub fn center(l: &LoopTable) -> Vec<usize> {
    let c = centrum(l);
    nucleus(l).into_iter().filter(|a| c.contains(a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, klein, symmetric};

    #[test]
    fn groups_satisfy_everything_but_s3_squares() {
        let z4 = cyclic(4);
        for p in Property::ALL {
            assert!(p.holds(&z4), "{p} fails on Z4");
        }
        let trivial = cyclic(1);
        assert!(Property::ALL.iter().all(|p| p.holds(&trivial)));
        let k = klein();
        assert!(is_centrum_square(&k) && is_central_square(&k));
    }

    #[test]
    fn s3_is_not_centrum_square() {
        // Squares of S3 are the 3-cycles and e; a 3-cycle does not commute
        // with a transposition.
        let s3 = symmetric(3);
        assert!(is_lc(&s3) && is_rc(&s3) && is_c(&s3));
        assert!(!is_centrum_square(&s3));
        assert!(!is_central_square(&s3));
        assert!(is_nuclear_square(&s3));
        assert_eq!(centrum(&s3), vec![0]);
        assert_eq!(nucleus(&s3), (0..6).collect::<Vec<_>>());
        // (xy)² = (yx)² fails: take x = (01), y = (12); xy and yx are the two
        // different 3-cycles, whose squares differ.
        assert!(!squares_commute_check(&s3));
        // x³ = x for transpositions and e for 3-cycles; (xy)³ = e but y³x³ = yx.
        assert!(!cube_antiautomorphism_check(&s3));
        let w = Property::CentrumSquare.counterexample(&s3).unwrap();
        assert!(!Property::CentrumSquare.holds_at(&s3, &w));
    }

    #[test]
    fn nuclei_of_abelian_group_are_everything() {
        let z4 = cyclic(4);
        let all: Vec<usize> = (0..4).collect();
        for set in [nucleus_left, nucleus_right, nucleus_middle, nucleus, centrum, center] {
            assert_eq!(set(&z4), all);
        }
        for set in [nucleus_left, nucleus_right, nucleus_middle, nucleus, centrum, center] {
            assert_eq!(set(&cyclic(1)), vec![0]);
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!("moufang".parse::<Property>(), Err(Error::UnknownProperty("moufang".into())));
    }

    #[test]
    fn report_collects_witnesses() {
        let r = PropertyReport::evaluate(&symmetric(3), &[Property::C, Property::CentrumSquare]);
        assert!(!r.all_hold());
        assert_eq!(r.results[&Property::C], None);
        assert!(r.results[&Property::CentrumSquare].is_some());
    }
}
