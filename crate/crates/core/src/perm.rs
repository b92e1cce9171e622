//! Permutations of `{0..n-1}`.
//!
//! Maps act on the right and products are read left to right: `&a * &b`
//! (or `a.then(&b)`) is the map `x -> (x a) b`, i.e. apply `a` first. Every
//! composite written in this crate (`R_{y²} R_z`, `J L_z² J`, ...) follows
//! this convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n as u8).collect() }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v >= n || seen[v] {
                return Err(Error::NotABijection(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { img: images.iter().map(|&v| v as u8).collect() })
    }

    /// Caller guarantees `img` is a bijection.
    pub(crate) fn from_raw(img: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm { img: inv }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Self {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Perm { img: self.img.iter().map(|&v| other.img[v as usize]).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| acc.then(self))
    }

    /// Conjugate `p⁻¹ self p`, read left to right.
    pub fn conjugate_by(&self, p: &Perm) -> Self {
        p.inverse().then(self).then(p)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    /// Order in SYM(n): lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1, |acc, l| lcm(acc, l as u64))
    }

    /// All permutations of degree `n` in lexicographic order of image arrays.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n as u8).permutations(n).map(|img| Perm { img })
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

/// Comma-separated image list, e.g. `2,3,0,1`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.img.iter().join(","))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotABijection(format!("'{s}' is not a comma-separated image list")))?;
        if images.len() > 256 {
            return Err(Error::NotABijection(format!("'{s}' is too long")));
        }
        Perm::from_images(&images)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Something that composes like a permutation group element.
pub trait GroupElement: Clone + Ord {
    fn compose(&self, other: &Self) -> Self;
    fn invert(&self) -> Self;
    fn is_neutral(&self) -> bool;
    fn element_order(&self) -> u64;
}

impl GroupElement for Perm {
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

/// True iff the finite set contains the neutral element and is closed under
/// composition and inversion.
pub fn is_subgroup<T: GroupElement>(elements: &[T]) -> bool {
    let set: std::collections::BTreeSet<&T> = elements.iter().collect();
    if !elements.iter().any(T::is_neutral) {
        return false;
    }
    elements.iter().all(|a| set.contains(&a.invert()))
        && elements.iter().all(|a| elements.iter().all(|b| set.contains(&a.compose(b))))
}

/// Multiset of element orders, as `order -> multiplicity`.
pub fn order_multiset<T: GroupElement>(elements: &[T]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for e in elements {
        *m.entry(e.element_order()).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_postfix() {
        let a = Perm::from_images(&[1, 2, 0]).unwrap();
        let b = Perm::from_images(&[0, 2, 1]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&b * &a).apply(0), 1);
    }

    #[test]
    fn inverse_and_order() {
        let p = Perm::from_images(&[1, 0, 3, 4, 2]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!("0,0,1".parse::<Perm>(), Err(Error::NotABijection(_))));
        assert!(matches!("0,3,1".parse::<Perm>(), Err(Error::NotABijection(_))));
        assert!("x,1".parse::<Perm>().is_err());
        assert_eq!("2,3,0,1".parse::<Perm>().unwrap().to_string(), "2,3,0,1");
    }

    #[test]
    fn enumerates_all_in_lex_order() {
        let all: Vec<_> = Perm::all(3).collect();
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(is_subgroup(&all));
        assert_eq!(order_multiset(&all), BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
    }
}
