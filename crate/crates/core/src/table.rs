//! Finite loops as validated Cayley tables.
//!
//! Element `0` is always the two-sided identity. Tables in any other
//! convention are rejected rather than relabelled; use
//! [`crate::isotopy::normalize_to_loop`] to bring a quasigroup with an
//! identity into this form.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Line, Result};
use crate::perm::{lcm, Perm};

/// Largest order a [`LoopTable`] may have.
pub const MAX_ORDER: usize = 16;

/// Selects one half of a statement written in dual form: `Left` for the
/// LC-/left-translation reading, `Right` for the RC-/right-translation one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A validated loop: Latin square of order `n` with `0` as identity.
/// Immutable once constructed.
#[derive(Clone)]
pub struct LoopTable {
    n: usize,
    cells: Vec<u8>,
    label: Option<String>,
}

impl LoopTable {
    /// Validates a raw square array.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let cells = check_square(rows)?;
        let n = rows.len();
        check_latin(n, &cells)?;
        for j in 0..n {
            if cells[j] as usize != j {
                return Err(Error::NoIdentity { line: Line::Row, position: j });
            }
            if cells[j * n] as usize != j {
                return Err(Error::NoIdentity { line: Line::Column, position: j });
            }
        }
        Ok(LoopTable { n, cells, label: None })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Caller guarantees `cells` is a normalized Latin square.
    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        LoopTable { n, cells, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `x · y`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub(crate) fn cells(&self) -> &[u8] {
        &self.cells
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.n })
        }
    }

    /// `L_x : y -> x·y`.
    pub fn left_translation(&self, x: usize) -> Result<Perm> {
        self.check(x)?;
        Ok(self.lt(x))
    }

    /// `R_x : y -> y·x`.
    pub fn right_translation(&self, x: usize) -> Result<Perm> {
        self.check(x)?;
        Ok(self.rt(x))
    }

    pub fn translation(&self, side: Side, x: usize) -> Result<Perm> {
        match side {
            Side::Left => self.left_translation(x),
            Side::Right => self.right_translation(x),
        }
    }

    pub(crate) fn lt(&self, x: usize) -> Perm {
        Perm::from_raw(self.cells[x * self.n..(x + 1) * self.n].to_vec())
    }

    pub(crate) fn rt(&self, x: usize) -> Perm {
        Perm::from_raw((0..self.n).map(|y| self.cells[y * self.n + x]).collect())
    }

    /// `x^λ`, the unique `a` with `a·x = e`.
    pub fn left_inverse(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        Ok(self.linv(x))
    }

    /// `x^ρ`, the unique `b` with `x·b = e`.
    pub fn right_inverse(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        Ok(self.rinv(x))
    }

    pub(crate) fn linv(&self, x: usize) -> usize {
        (0..self.n).find(|&a| self.mul(a, x) == 0).expect("Latin column contains e")
    }

    pub(crate) fn rinv(&self, x: usize) -> usize {
        (0..self.n).find(|&b| self.mul(x, b) == 0).expect("Latin row contains e")
    }

    /// The inversion map `J : x -> x⁻¹`. Fails on the first element whose
    /// left and right inverses differ.
    pub fn j_map(&self) -> Result<Perm> {
        let mut img = Vec::with_capacity(self.n);
        for x in 0..self.n {
            let l = self.linv(x);
            if l != self.rinv(x) {
                return Err(Error::NoTwoSidedInverse(x));
            }
            img.push(l as u8);
        }
        Ok(Perm::from_raw(img))
    }

    pub fn has_two_sided_inverses(&self) -> bool {
        (0..self.n).all(|x| self.linv(x) == self.rinv(x))
    }

    /// `x^k` with `x^0 = e` and `x^k = x · x^(k-1)`.
    pub fn power(&self, x: usize, k: u32) -> Result<usize> {
        self.check(x)?;
        Ok(self.pow_left(x, k))
    }

    /// The other association order: `x^k = x^(k-1) · x`.
    pub fn power_right_assoc(&self, x: usize, k: u32) -> Result<usize> {
        self.check(x)?;
        Ok((0..k).fold(0, |acc, _| self.mul(acc, x)))
    }

    pub(crate) fn pow_left(&self, x: usize, k: u32) -> usize {
        (0..k).fold(0, |acc, _| self.mul(x, acc))
    }

    /// `x·x`.
    #[inline]
    pub fn square(&self, x: usize) -> usize {
        self.mul(x, x)
    }

    /// Least `k ≥ 1` with `x^k = e` (left-associated powers). Always exists:
    /// `x^k` is the `k`-th point on the orbit of `e` under `L_x`.
    pub fn element_order(&self, x: usize) -> Result<u64> {
        self.check(x)?;
        let mut k = 1u64;
        let mut p = x;
        while p != 0 {
            p = self.mul(x, p);
            k += 1;
        }
        Ok(k)
    }

    /// Exponent under the left-associated power convention, bounded by the
    /// lcm of the element orders.
    pub fn exponent(&self) -> Option<Exponent> {
        self.exponent_with_bound(None)
    }

    /// As [`Self::exponent`] but gives up (returns `None`) when the least
    /// common exponent exceeds `bound`.
    pub fn exponent_with_bound(&self, bound: Option<u64>) -> Option<Exponent> {
        let value = self.elements().map(|x| self.element_order(x).unwrap()).fold(1, lcm);
        if bound.is_some_and(|b| value > b) {
            return None;
        }
        let k = u32::try_from(value).ok()?;
        let right_assoc_agrees =
            self.elements().all(|x| self.power_right_assoc(x, k).unwrap() == 0);
        Some(Exponent { value, right_assoc_agrees })
    }
}

/// Result of [`LoopTable::exponent`]. `right_assoc_agrees` is false when the
/// right-associated `k`-th power of some element is not `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exponent {
    pub value: u64,
    pub right_assoc_agrees: bool,
}

impl Exponent {
    pub fn divides(&self, m: u64) -> bool {
        m.is_multiple_of(self.value)
    }
}

impl PartialEq for LoopTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.cells == other.cells
    }
}

impl Eq for LoopTable {}

impl Hash for LoopTable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.cells.hash(state);
    }
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("LoopTable");
        if let Some(l) = &self.label {
            d.field("label", l);
        }
        d.field("rows", &self.rows()).finish()
    }
}

pub(crate) fn check_square(rows: &[Vec<usize>]) -> Result<Vec<u8>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let mut cells = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::BadEntry { row: i, col: j, value: v, order: n });
            }
            cells.push(v as u8);
        }
    }
    Ok(cells)
}

pub(crate) fn check_latin(n: usize, cells: &[u8]) -> Result<()> {
    for i in 0..n {
        let mut row_seen = 0u32;
        let mut col_seen = 0u32;
        for j in 0..n {
            let r = cells[i * n + j];
            if row_seen & (1 << r) != 0 {
                return Err(Error::NotLatin { line: Line::Row, index: i, value: r as usize });
            }
            row_seen |= 1 << r;
            let c = cells[j * n + i];
            if col_seen & (1 << c) != 0 {
                return Err(Error::NotLatin { line: Line::Column, index: i, value: c as usize });
            }
            col_seen |= 1 << c;
        }
    }
    Ok(())
}
