//! Small named loops used in tests, examples and the CLI.

use crate::perm::Perm;
use crate::table::LoopTable;

/// `Z_n` under addition.
pub fn cyclic(n: usize) -> LoopTable {
    LoopTable::from_fn(n, |x, y| (x + y) % n).expect("Z_n is a loop").with_label(format!("Z{n}"))
}

/// `Z_2 × Z_2` with elements encoded as 2-bit vectors.
pub fn klein() -> LoopTable {
    LoopTable::from_fn(4, |x, y| x ^ y).expect("Klein four-group").with_label("Z2xZ2")
}

/// Direct product; element `(a, b)` is encoded as `a * |B| + b`.
pub fn direct_product(a: &LoopTable, b: &LoopTable) -> LoopTable {
    let m = b.order();
    LoopTable::from_fn(a.order() * m, |x, y| {
        a.mul(x / m, y / m) * m + b.mul(x % m, y % m)
    })
    .expect("direct product of loops is a loop")
}

/// The symmetric group on `k ≤ 3` points. Elements are the permutations in
/// lexicographic order of image arrays (so the identity is `0`), multiplied
/// left to right.
pub fn symmetric(k: usize) -> LoopTable {
    assert!(k <= 3, "S_k for k > 3 exceeds the maximum table order");
    let elems: Vec<Perm> = Perm::all(k).collect();
    let index = |p: &Perm| elems.iter().position(|q| q == p).unwrap();
    LoopTable::from_fn(elems.len(), |x, y| index(&elems[x].then(&elems[y])))
        .expect("S_k is a group")
        .with_label(format!("S{k}"))
}

/// All `k`-tuples over `0..n` in lexicographic order.
pub(crate) fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}
