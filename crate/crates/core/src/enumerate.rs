//! Exhaustive generation of all loops of a small order.
//!
//! A loop of order `n` with identity `0` is a Latin square whose first row
//! and column are `0..n`. The generator fills the remaining cells row by
//! row, tracking used values per row and column in bitmasks, and tries
//! candidates in increasing order, so tables come out in lexicographic
//! row-major order. Filters run on completed tables only.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::table::{LoopTable, MAX_ORDER};

/// Largest order swept without an explicit override. Order 7 already has
/// about 1.7·10⁷ loops.
pub const MAX_ENUMERATION_ORDER: usize = 6;

pub type Filter<'a> = &'a (dyn Fn(&LoopTable) -> bool + Sync);

/// An enumeration of one order with conjunctive filters.
pub struct EnumerationJob<'a> {
    order: usize,
    filters: Vec<Filter<'a>>,
    allow_large: bool,
}

/// Tables visited and tables that passed every filter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub generated: u64,
    pub passed: u64,
}

impl<'a> EnumerationJob<'a> {
    pub fn new(order: usize) -> Self {
        EnumerationJob { order, filters: Vec::new(), allow_large: false }
    }

    pub fn filter(mut self, f: Filter<'a>) -> Self {
        self.filters.push(f);
        self
    }

    /// Lifts [`MAX_ENUMERATION_ORDER`]; [`MAX_ORDER`] still applies.
    pub fn allow_large_orders(mut self) -> Self {
        self.allow_large = true;
        self
    }

    fn check_order(&self) -> Result<()> {
        let max = if self.allow_large { MAX_ORDER } else { MAX_ENUMERATION_ORDER };
        if self.order == 0 || self.order > max {
            return Err(Error::OrderTooLarge { order: self.order, max });
        }
        Ok(())
    }

    fn passes(&self, t: &LoopTable) -> bool {
        self.filters.iter().all(|f| f(t))
    }

    /// Streams every passing table to `sink`, which may stop early.
    pub fn run(&self, mut sink: impl FnMut(LoopTable) -> ControlFlow<()>) -> Result<Stats> {
        self.check_order()?;
        let mut stats = Stats::default();
        let mut search = Search::new(self.order);
        let start = search.first_free();
        let _ = search.fill(start, &mut |cells| {
            stats.generated += 1;
            let t = LoopTable::from_cells_unchecked(self.order, cells.to_vec());
            if self.passes(&t) {
                stats.passed += 1;
                sink(t)
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(stats)
    }

    pub fn collect(&self) -> Result<Vec<LoopTable>> {
        let mut out = Vec::new();
        self.run(|t| {
            out.push(t);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Same traversal as [`Self::run`] without building tables when there
    /// are no filters.
    pub fn count(&self) -> Result<u64> {
        self.check_order()?;
        if !self.filters.is_empty() {
            return Ok(self.run(|_| ControlFlow::Continue(()))?.passed);
        }
        let mut search = Search::new(self.order);
        let start = search.first_free();
        let mut count = 0u64;
        let _ = search.fill(start, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        Ok(count)
    }

    /// Parallel collection. The subtrees under each value of cell `(1, 1)`
    /// are generated independently and concatenated in value order, so the
    /// output equals [`Self::collect`].
    pub fn collect_par(&self) -> Result<Vec<LoopTable>> {
        self.check_order()?;
        let n = self.order;
        if n < 3 {
            return self.collect();
        }
        let parts: Vec<Vec<LoopTable>> = (0..n)
            .into_par_iter()
            .map(|v| {
                let mut search = Search::new(n);
                let mut out = Vec::new();
                let first = search.first_free();
                if search.allowed(first, v) {
                    search.place(first, v);
                    let _ = search.fill(first + 1, &mut |cells| {
                        let t = LoopTable::from_cells_unchecked(n, cells.to_vec());
                        if self.passes(&t) {
                            out.push(t);
                        }
                        ControlFlow::Continue(())
                    });
                }
                out
            })
            .collect();
        Ok(parts.concat())
    }
}

struct Search {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut s = Search { n, cells: vec![0; n * n], row_used: vec![0; n], col_used: vec![0; n] };
        for i in 0..n {
            s.set(i, i); // row 0
            s.set(i * n, i); // column 0
        }
        s
    }

    fn set(&mut self, idx: usize, v: usize) {
        let (r, c) = (idx / self.n, idx % self.n);
        self.cells[idx] = v as u8;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
    }

    fn first_free(&self) -> usize {
        self.n + 1
    }

    fn allowed(&self, idx: usize, v: usize) -> bool {
        let (r, c) = (idx / self.n, idx % self.n);
        (self.row_used[r] | self.col_used[c]) & (1 << v) == 0
    }

    fn place(&mut self, idx: usize, v: usize) {
        self.set(idx, v);
    }

    fn unplace(&mut self, idx: usize) {
        let (r, c) = (idx / self.n, idx % self.n);
        let v = self.cells[idx];
        self.row_used[r] &= !(1 << v);
        self.col_used[c] &= !(1 << v);
    }

    /// Next free cell after `idx`, skipping column 0.
    fn next(&self, idx: usize) -> usize {
        let nxt = idx + 1;
        if nxt.is_multiple_of(self.n) {
            nxt + 1
        } else {
            nxt
        }
    }

    fn fill(&mut self, idx: usize, emit: &mut dyn FnMut(&[u8]) -> ControlFlow<()>) -> ControlFlow<()> {
        let n = self.n;
        if idx >= n * n {
            return emit(&self.cells);
        }
        if idx.is_multiple_of(n) {
            return self.fill(idx + 1, emit);
        }
        let (r, c) = (idx / n, idx % n);
        let mut free = !(self.row_used[r] | self.col_used[c]) & ((1u32 << n) - 1);
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            self.place(idx, v);
            let flow = self.fill(self.next(idx), emit);
            self.unplace(idx);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Every loop of order `n` passing all `filters`, in lexicographic order.
pub fn enumerate_loops(n: usize, filters: &[Filter<'_>]) -> Result<Vec<LoopTable>> {
    filters.iter().fold(EnumerationJob::new(n), |job, f| job.filter(*f)).collect()
}

pub fn count_loops(n: usize, filters: &[Filter<'_>]) -> Result<u64> {
    filters.iter().fold(EnumerationJob::new(n), |job, f| job.filter(*f)).count()
}

/// First loop satisfying `predicate`, scanning orders `1..=n_max` and each
/// order lexicographically.
pub fn search_witness(n_max: usize, predicate: impl Fn(&LoopTable) -> bool) -> Result<Option<LoopTable>> {
    for n in 1..=n_max {
        let mut found = None;
        EnumerationJob::new(n).run(|t| {
            if predicate(&t) {
                found = Some(t);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props;

    #[test]
    fn small_counts() {
        let expected = [1, 1, 1, 4, 56];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(count_loops(i + 1, &[]).unwrap(), want);
        }
    }

    #[test]
    fn order_cap() {
        assert_eq!(count_loops(7, &[]), Err(Error::OrderTooLarge { order: 7, max: 6 }));
        assert_eq!(count_loops(0, &[]), Err(Error::OrderTooLarge { order: 0, max: 6 }));
        assert!(EnumerationJob::new(17).allow_large_orders().count().is_err());
    }

    #[test]
    fn lexicographic_and_distinct() {
        let loops = enumerate_loops(5, &[]).unwrap();
        assert!(loops.windows(2).all(|w| w[0].rows() < w[1].rows()));
        assert_eq!(EnumerationJob::new(5).collect_par().unwrap(), loops);
    }

    #[test]
    fn filters_are_conjunctive() {
        let c: Filter = &props::is_c;
        let all4 = count_loops(4, &[c]).unwrap();
        assert_eq!(all4, 4);
        let c_loops = enumerate_loops(5, &[c]).unwrap();
        assert!(c_loops.iter().all(props::is_c));
        let not_group: Filter = &|t| !props::is_associative(t);
        assert_eq!(count_loops(5, &[c, not_group]).unwrap(), 0);
        let stats = EnumerationJob::new(5).filter(c).run(|_| ControlFlow::Continue(())).unwrap();
        assert_eq!(stats.generated, 56);
        assert_eq!(stats.passed as usize, c_loops.len());
    }

    #[test]
    fn witness_search() {
        let w = search_witness(5, |t| !props::is_associative(t)).unwrap().unwrap();
        assert_eq!(w.order(), 5);
        let first = enumerate_loops(5, &[]).unwrap().into_iter().find(|t| !props::is_associative(t));
        assert_eq!(Some(w), first);
        assert_eq!(search_witness(5, |_| false).unwrap(), None);
        let no_j = search_witness(5, |t| t.j_map().is_err()).unwrap().unwrap();
        assert_eq!(no_j.order(), 5);
    }
}
