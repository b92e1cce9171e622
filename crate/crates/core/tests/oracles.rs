//! Library results against the independent reference implementations in
//! `common`.

mod common;

use std::collections::BTreeSet;

use loopkit::autotopy;
use loopkit::enumerate::{count_loops, enumerate_loops, EnumerationJob};
use loopkit::groups::{cyclic, klein, symmetric};
use loopkit::{props, text};

#[test]
fn enumeration_matches_row_oracle() {
    for n in 1..=5 {
        let ours: Vec<_> = enumerate_loops(n, &[]).unwrap().iter().map(|t| t.rows()).collect();
        assert_eq!(ours, common::naive_loops(n), "order {n}");
    }
}

#[test]
fn order_six_count_matches_row_oracle() {
    let oracle = common::naive_loops(6);
    assert_eq!(oracle.len(), 9408);
    assert_eq!(count_loops(6, &[]).unwrap(), 9408);
    let ours: Vec<_> = EnumerationJob::new(6).collect_par().unwrap().iter().map(|t| t.rows()).collect();
    assert_eq!(ours, oracle);
}

#[test]
fn identity_class_counts() {
    // (LC, RC, C, associative) per order, from the naive identity checks.
    let frozen = [(1, 1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1), (4, 4, 4, 4), (6, 6, 6, 6), (86, 86, 80, 80)];
    for (i, want) in frozen.iter().enumerate() {
        let n = i + 1;
        let rows = common::naive_loops(n);
        let naive = (
            rows.iter().filter(|m| common::naive_lc(m)).count(),
            rows.iter().filter(|m| common::naive_rc(m)).count(),
            rows.iter().filter(|m| common::naive_c(m)).count(),
            rows.iter().filter(|m| common::naive_assoc(m)).count(),
        );
        assert_eq!(&naive, want, "order {n}");
        for (m, t) in rows.iter().zip(enumerate_loops(n, &[]).unwrap()) {
            assert_eq!(common::naive_lc(m), props::is_lc(&t));
            assert_eq!(common::naive_rc(m), props::is_rc(&t));
            assert_eq!(common::naive_c(m), props::is_c(&t));
            assert_eq!(common::naive_assoc(m), props::is_associative(&t));
        }
    }
}

fn raw_aut(l: &loopkit::LoopTable) -> BTreeSet<common::RawTriple> {
    autotopy::autotopism_group(l)
        .unwrap()
        .into_iter()
        .map(|t| (t.u.images(), t.v.images(), t.w.images()))
        .collect()
}

#[test]
fn autotopisms_match_brute_force() {
    for n in 1..=4 {
        for l in enumerate_loops(n, &[]).unwrap() {
            assert_eq!(raw_aut(&l), common::brute_autotopisms(&l.rows()), "{}", text::emit_inline(&l));
        }
    }
}

#[test]
fn autotopism_orders_of_named_groups() {
    // |AUT(G)| = |G|² · |Aut(G)| for a group G.
    for (l, want) in [(cyclic(2), 4), (cyclic(3), 18), (cyclic(4), 32), (klein(), 96), (cyclic(5), 100), (symmetric(3), 216)] {
        assert_eq!(autotopy::autotopism_group(&l).unwrap().len(), want);
    }
}

#[test]
fn autotopism_group_is_sorted_and_distinct() {
    let aut = autotopy::autotopism_group(&cyclic(4)).unwrap();
    assert!(aut.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn symmetric_fixture_is_s3() {
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/s3.txt")).unwrap();
    assert_eq!(text::parse(&src).unwrap(), symmetric(3));
}
