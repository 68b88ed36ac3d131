//! Proper chains of a tope graph, packed 8 bits per chamber into a `u128`.

use std::collections::HashMap;

use crate::arrangement::TopeGraph;

/// At most 16 chambers per chain, so grades up to 15.
pub const MAX_GRADE: usize = 15;
/// Chamber indices must fit in a byte.
pub const MAX_CHAMBERS: usize = 256;

pub type PackedChain = u128;

#[inline]
pub fn vertex(c: PackedChain, i: usize) -> usize {
    ((c >> (8 * i)) & 0xff) as usize
}

#[inline]
pub fn with_vertex(c: PackedChain, i: usize, v: usize) -> PackedChain {
    c | (v as u128) << (8 * i)
}

/// Drops vertex `i`, shifting the later ones down.
#[inline]
pub fn remove_vertex(c: PackedChain, i: usize) -> PackedChain {
    let low = c & ((1u128 << (8 * i)) - 1);
    let high = if 8 * (i + 1) >= 128 { 0 } else { c >> (8 * (i + 1)) };
    low | high << (8 * i)
}

pub fn unpack(c: PackedChain, k: usize) -> Vec<usize> {
    (0..=k).map(|i| vertex(c, i)).collect()
}

pub fn pack(vs: &[usize]) -> PackedChain {
    vs.iter().enumerate().fold(0, |c, (i, &v)| with_vertex(c, i, v))
}

/// Chambers grouped by distance from each chamber.
pub fn spheres(g: &TopeGraph) -> Vec<Vec<Vec<usize>>> {
    (0..g.len())
        .map(|c| {
            let mut by = vec![Vec::new(); g.hyperplanes() + 1];
            for d in 0..g.len() {
                by[g.distance(c, d)].push(d);
            }
            by
        })
        .collect()
}

/// `#P_{k,l}` for `l <= max_length`, indexed `[l][k]`, by dynamic
/// programming over the last chamber.
pub fn chain_counts(g: &TopeGraph, max_length: usize) -> Vec<Vec<u128>> {
    let nch = g.len();
    let sph = spheres(g);
    // walks[l][k][x]: chains of grade k and length l ending at x
    let mut walks: Vec<Vec<Vec<u128>>> = vec![Vec::new(); max_length + 1];
    walks[0].push(vec![1; nch]);
    for l in 1..=max_length {
        for k in 1..=l {
            let mut row = vec![0u128; nch];
            for (y, slot) in row.iter_mut().enumerate() {
                for (d, xs) in sph[y].iter().enumerate().skip(1).take(l) {
                    let prev = &walks[l - d];
                    if k - 1 < prev.len() {
                        for &x in xs {
                            *slot += prev[k - 1][x];
                        }
                    }
                }
            }
            walks[l].push(row);
        }
        // grade 0 has length 0 only
        walks[l].insert(0, vec![0; nch]);
    }
    walks.iter().map(|by_k| by_k.iter().map(|xs| xs.iter().sum()).collect()).collect()
}

/// Key of a block: length, end chamber, support.
pub type BlockKey = (usize, usize, u64);

/// All proper chains starting at `start` with length at most `max_length`,
/// bucketed by `(length, end, support)` and then by grade.
pub fn chains_from(
    g: &TopeGraph,
    sph: &[Vec<Vec<usize>>],
    start: usize,
    max_length: usize,
) -> HashMap<BlockKey, Vec<Vec<PackedChain>>> {
    let mut out: HashMap<BlockKey, Vec<Vec<PackedChain>>> = HashMap::new();
    let mut stack: Vec<(PackedChain, usize, usize, usize, u64)> = vec![(with_vertex(0, 0, start), 0, start, 0, 0)];
    while let Some((c, k, last, len, support)) = stack.pop() {
        let grades = out.entry((len, last, support)).or_default();
        if grades.len() <= k {
            grades.resize(k + 1, Vec::new());
        }
        grades[k].push(c);
        if k == MAX_GRADE {
            continue;
        }
        for (d, ys) in sph[last].iter().enumerate().skip(1).take(max_length - len) {
            for &y in ys {
                let s = support | g.separation(last, y);
                stack.push((with_vertex(c, k + 1, y), k + 1, y, len + d, s));
            }
        }
    }
    out
}

/// `x_i` is smooth iff the separating sets on either side are disjoint.
#[inline]
pub fn smooth(g: &TopeGraph, a: usize, b: usize, c: usize) -> bool {
    g.separation(a, b) & g.separation(b, c) == 0
}

/// `∂ = sum_{i=1}^{k-1} (-1)^{i-1} ∂_i`, where `∂_i` removes a smooth `x_i`.
pub fn boundary(g: &TopeGraph, c: PackedChain, k: usize) -> Vec<(PackedChain, i64)> {
    let mut out = Vec::new();
    for i in 1..k {
        if smooth(g, vertex(c, i - 1), vertex(c, i), vertex(c, i + 1)) {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            out.push((remove_vertex(c, i), sign));
        }
    }
    out
}

/// `∂∂ c = 0`, computed on the chain level.
pub fn boundary_squares_to_zero(g: &TopeGraph, c: PackedChain, k: usize) -> bool {
    let mut acc: HashMap<PackedChain, i64> = HashMap::new();
    for (f, s) in boundary(g, c, k) {
        for (ff, t) in boundary(g, f, k - 1) {
            *acc.entry(ff).or_default() += s * t;
        }
    }
    acc.values().all(|&v| v == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn packing() {
        let c = pack(&[3, 7, 200, 1]);
        assert_eq!(unpack(c, 3), vec![3, 7, 200, 1]);
        assert_eq!(unpack(remove_vertex(c, 1), 2), vec![3, 200, 1]);
        let full = pack(&[1; 16]);
        assert_eq!(unpack(remove_vertex(full, 15), 14), vec![1; 15]);
    }

    #[test]
    fn counts_match_enumeration() {
        let g = TopeGraph::enumerate(&catalog::braid(3));
        let sph = spheres(&g);
        let counts = chain_counts(&g, 4);
        let mut enumerated = vec![vec![0u128; 5]; 5];
        for s in 0..g.len() {
            for ((l, _, _), grades) in chains_from(&g, &sph, s, 4) {
                for (k, cs) in grades.iter().enumerate() {
                    enumerated[l][k] += cs.len() as u128;
                }
            }
        }
        for l in 0..=4 {
            for k in 0..=l {
                assert_eq!(counts[l][k], enumerated[l][k], "l={l} k={k}");
            }
        }
        assert_eq!(counts[0][0], 6);
        assert_eq!(counts[1][1], 12);
    }

    #[test]
    fn square_boundary() {
        let g = TopeGraph::enumerate(&catalog::boolean(2));
        // chambers 0..4 on the square: 0-1-3 is geodesic, 0-1-0 is not
        let c = pack(&[0, 1, 3]);
        assert_eq!(boundary(&g, c, 2), vec![(pack(&[0, 3]), 1)]);
        assert!(boundary(&g, pack(&[0, 1, 0]), 2).is_empty());
        assert!(boundary_squares_to_zero(&g, pack(&[0, 1, 3, 2, 0]), 4));
    }
}
