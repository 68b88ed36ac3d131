//! Rank and torsion of sparse integer matrices.
//!
//! Unit pivots are eliminated sparsely (each such step splits off a `±1`
//! invariant factor); whatever remains goes through a dense Smith normal
//! form over `BigInt`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, BTreeMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Row-major sparse matrix with entries sorted by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, rows: Vec::new() }
    }

    /// Appends a row given as unsorted `(col, value)` pairs; duplicates add up.
    pub fn push_row(&mut self, mut entries: Vec<(u32, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(u32, i64)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.cols];
                for &(c, v) in r {
                    d[c as usize] = v.into();
                }
                d
            })
            .collect()
    }
}

/// Rank and the invariant factors greater than one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmithSummary {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

pub fn smith(m: &SparseMatrix) -> SmithSummary {
    match sparse_unit_elimination(m) {
        Some((rank, rest)) => {
            let mut s = dense_smith(rest);
            s.rank += rank;
            s
        }
        None => dense_smith(m.to_dense()),
    }
}

fn merge_rows(target: &[(u32, i64)], pivot: &[(u32, i64)], factor: i64) -> Option<Vec<(u32, i64)>> {
    // target - factor * pivot
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let take_t = j == pivot.len() || (i < target.len() && target[i].0 < pivot[j].0);
        let take_p = i == target.len() || (j < pivot.len() && pivot[j].0 < target[i].0);
        if take_t {
            out.push(target[i]);
            i += 1;
        } else if take_p {
            out.push((pivot[j].0, pivot[j].1.checked_mul(factor)?.checked_neg()?));
            j += 1;
        } else {
            let v = target[i].1.checked_sub(pivot[j].1.checked_mul(factor)?)?;
            if v != 0 {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates `±1` pivots, preferring short rows and short columns.
/// Returns the number of pivots and the leftover dense block, or `None`
/// on `i64` overflow.
fn sparse_unit_elimination(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows = m.rows.clone();
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c as usize].push(r as u32);
        }
    }
    let mut col_dead = vec![false; m.cols];
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> =
        rows.iter().enumerate().map(|(r, row)| Reverse((row.len(), r as u32))).collect();
    let mut rank = 0;
    while let Some(Reverse((len, r))) = heap.pop() {
        let r = r as usize;
        if !alive[r] || rows[r].len() != len {
            continue;
        }
        if len == 0 {
            alive[r] = false;
            continue;
        }
        let pivot_col = rows[r]
            .iter()
            .filter(|e| e.1 == 1 || e.1 == -1)
            .min_by_key(|e| col_rows[e.0 as usize].len())
            .map(|e| e.0);
        let Some(pc) = pivot_col else {
            // kept for the dense stage unless a later step changes it
            continue;
        };
        let pv = rows[r].iter().find(|e| e.0 == pc).unwrap().1;
        let pivot_row = std::mem::take(&mut rows[r]);
        alive[r] = false;
        let users = std::mem::take(&mut col_rows[pc as usize]);
        for &o in &users {
            let o = o as usize;
            if o == r || !alive[o] {
                continue;
            }
            let Ok(pos) = rows[o].binary_search_by_key(&pc, |e| e.0) else {
                continue;
            };
            let factor = rows[o][pos].1 * pv;
            let merged = merge_rows(&rows[o], &pivot_row, factor)?;
            for &(c, _) in &merged {
                if c != pc && rows[o].binary_search_by_key(&c, |e| e.0).is_err() {
                    col_rows[c as usize].push(o as u32);
                }
            }
            rows[o] = merged;
            heap.push(Reverse((rows[o].len(), o as u32)));
        }
        col_dead[pc as usize] = true;
        rank += 1;
    }
    let rest: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .filter(|(r, row)| alive[*r] && !row.is_empty())
        .map(|(_, row)| {
            let mut d = vec![BigInt::zero(); m.cols];
            for &(c, v) in row {
                d[c as usize] = v.into();
            }
            d
        })
        .collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_dead[c]).collect();
    let rest = rest
        .into_iter()
        .map(|d| live_cols.iter().map(|&c| d[c].clone()).collect())
        .collect();
    Some((rank, rest))
}

/// Smith normal form of a dense matrix; only the nonzero diagonal is kept.
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> SmithSummary {
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    let rows = a.len();
    if rows == 0 {
        return SmithSummary::default();
    }
    let cols = a[0].len();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let torsion = diag
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
        .collect();
    SmithSummary { rank: diag.len(), torsion }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Invariant-factor form (`d_1 | d_2 | ...`, all `> 1`) of a direct sum of
/// cyclic groups of the given orders.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &o in orders {
        for (p, q) in prime_powers(o) {
            by_prime.entry(p).or_default().push(q);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for qs in by_prime.values_mut() {
        qs.sort_unstable();
        // largest powers go to the last factors
        for (slot, q) in out.iter_mut().rev().zip(qs.iter().rev()) {
            *slot *= q;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows[0].len());
        for r in rows {
            m.push_row(r.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &v)| (c as u32, v)).collect());
        }
        m
    }

    #[test]
    fn torsion_from_dense_stage() {
        let m = sparse(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith(&m), SmithSummary { rank: 2, torsion: vec![6] });
        let m = sparse(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(smith(&m), SmithSummary { rank: 3, torsion: vec![2, 6, 12] });
    }

    #[test]
    fn unit_pivots_only() {
        // boundary of a triangle: rank 2, no torsion
        let m = sparse(&[&[-1, 1, 0], &[0, -1, 1], &[-1, 0, 1]]);
        assert_eq!(smith(&m), SmithSummary { rank: 2, torsion: vec![] });
    }

    #[test]
    fn mixed_stage() {
        // real projective plane style relation: one column hit twice
        let m = sparse(&[&[1, 1, 0], &[1, -1, 0], &[0, 0, 0]]);
        assert_eq!(smith(&m), SmithSummary { rank: 2, torsion: vec![2] });
    }

    #[test]
    fn invariant_factor_recombination() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[2, 4, 3]), vec![2, 12]);
        assert!(invariant_factors(&[]).is_empty());
    }

    #[test]
    fn matches_dense_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = sparse(&refs);
            assert_eq!(smith(&m), dense_smith(m.to_dense()));
        }
    }
}
