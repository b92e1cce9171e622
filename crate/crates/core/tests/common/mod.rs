//! Independent reference implementations used to cross-check the library.
//! Nothing here calls into `loopkit` except to convert results.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Rows = Vec<Vec<usize>>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Loops of order `n` built one whole row at a time: row `i` is any
/// permutation starting with `i` that clashes with no earlier row in any
/// column. Rows are tried in lexicographic order, so the output is sorted.
pub fn naive_loops(n: usize) -> Vec<Rows> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut rows: Rows = vec![(0..n).collect()];
    fn go(n: usize, perms: &[Vec<usize>], rows: &mut Rows, out: &mut Vec<Rows>) {
        let i = rows.len();
        if i == n {
            out.push(rows.clone());
            return;
        }
        for p in perms.iter().filter(|p| p[0] == i) {
            if rows.iter().all(|r| r.iter().zip(p).all(|(a, b)| a != b)) {
                rows.push(p.clone());
                go(n, perms, rows, out);
                rows.pop();
            }
        }
    }
    go(n, &perms, &mut rows, &mut out);
    out
}

pub type RawTriple = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Every (U, V, W) in S_n³ with xU·yV = (x·y)W, by exhaustion.
pub fn brute_autotopisms(rows: &Rows) -> BTreeSet<RawTriple> {
    let n = rows.len();
    let perms = permutations(n);
    let mut out = BTreeSet::new();
    for u in &perms {
        for v in &perms {
            for w in &perms {
                let ok = (0..n).all(|x| (0..n).all(|y| rows[u[x]][v[y]] == w[rows[x][y]]));
                if ok {
                    out.insert((u.clone(), v.clone(), w.clone()));
                }
            }
        }
    }
    out
}

fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

/// (xx)(yz) = (x(xy))z
pub fn naive_lc(m: &Rows) -> bool {
    all3(m.len(), |x, y, z| m[m[x][x]][m[y][z]] == m[m[x][m[x][y]]][z])
}

/// (zy)(xx) = z((yx)x)
pub fn naive_rc(m: &Rows) -> bool {
    all3(m.len(), |x, y, z| m[m[z][y]][m[x][x]] == m[z][m[m[y][x]][x]])
}

/// x(y(yz)) = ((xy)y)z
pub fn naive_c(m: &Rows) -> bool {
    all3(m.len(), |x, y, z| m[x][m[y][m[y][z]]] == m[m[m[x][y]][y]][z])
}

pub fn naive_assoc(m: &Rows) -> bool {
    all3(m.len(), |x, y, z| m[m[x][y]][z] == m[x][m[y][z]])
}
