//! Geodesic magnitude homology from interval order complexes, and the
//! closed formula in terms of flats.

use std::collections::HashMap;

use rayon::prelude::*;

use super::snf::{smith, SparseMatrix};
use super::table::{BettiTable, HomologySummand};
use crate::arrangement::{IntersectionLattice, TopeGraph};

/// Chambers strictly between `a` and `b`, sorted by distance from `a`.
pub fn open_interval(g: &TopeGraph, a: usize, b: usize) -> Vec<usize> {
    let l = g.distance(a, b);
    let mut inner: Vec<usize> = (0..g.len())
        .filter(|&u| u != a && u != b && g.distance(a, u) + g.distance(u, b) == l)
        .collect();
    inner.sort_by_key(|&u| (g.distance(a, u), u));
    inner
}

/// Reduced homology `H~_j` of the order complex of the open interval
/// `(a, b)`, for `j = -1..=max_dim`; index `j + 1` in the result.
pub fn interval_reduced_homology(g: &TopeGraph, a: usize, b: usize, max_dim: usize) -> Vec<HomologySummand> {
    let inner = open_interval(g, a, b);
    // strict order: u < v iff u lies between a and v
    let below = |u: usize, v: usize| u != v && g.distance(a, u) + g.distance(u, v) == g.distance(a, v);
    let succ: Vec<Vec<usize>> = (0..inner.len())
        .map(|i| (i + 1..inner.len()).filter(|&j| below(inner[i], inner[j])).collect())
        .collect();

    // simplices[j + 1] = chains with j + 1 elements, as index lists
    let top = max_dim + 1;
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 2];
    simplices[0].push(Vec::new());
    let mut stack: Vec<Vec<usize>> = (0..inner.len()).map(|i| vec![i]).collect();
    while let Some(s) = stack.pop() {
        let len = s.len();
        if len > top + 1 {
            continue;
        }
        for &j in &succ[*s.last().unwrap()] {
            let mut t = s.clone();
            t.push(j);
            stack.push(t);
        }
        simplices[len].push(s);
    }
    for sims in simplices.iter_mut() {
        sims.sort_unstable();
    }

    // ranks[i] = rank of the boundary out of simplices[i]
    let mut ranks = vec![0usize; top + 3];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); top + 3];
    for i in 1..simplices.len() {
        if simplices[i].is_empty() {
            continue;
        }
        let index: HashMap<&[usize], u32> =
            simplices[i - 1].iter().enumerate().map(|(r, s)| (s.as_slice(), r as u32)).collect();
        let mut m = SparseMatrix::new(simplices[i - 1].len());
        for s in &simplices[i] {
            let row = (0..s.len())
                .map(|drop| {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(p, _)| p != drop).map(|(_, &x)| x).collect();
                    (index[face.as_slice()], if drop % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            m.push_row(row);
        }
        let snf = smith(&m);
        ranks[i] = snf.rank;
        torsion[i] = snf.torsion;
    }
    (0..=top)
        .map(|i| {
            if i >= simplices.len() {
                return HomologySummand::default();
            }
            HomologySummand {
                free_rank: (simplices[i].len() - ranks[i] - ranks[i + 1]) as u64,
                torsion: torsion[i + 1].clone(),
            }
        })
        .collect()
}

/// `MH^geod_{k,l} = ⊕_{d(a,b) = l} H~_{k-2}((a, b))`, with `MH^geod_{0,0}`
/// free on the chambers.
pub fn geodesic_homology_direct(g: &TopeGraph, max_length: usize) -> BettiTable {
    let mut t = BettiTable::new(max_length);
    t.add(0, 0, &HomologySummand::free(g.len() as u64));
    let parts: Vec<BettiTable> = (0..g.len())
        .into_par_iter()
        .map(|a| {
            let mut t = BettiTable::new(max_length);
            for b in 0..g.len() {
                let l = g.distance(a, b);
                if l == 0 || l > max_length {
                    continue;
                }
                let h = interval_reduced_homology(g, a, b, l.saturating_sub(2));
                for (i, s) in h.iter().enumerate() {
                    // i = j + 1 with k = j + 2
                    t.add(i + 1, l, s);
                }
            }
            t
        })
        .collect();
    for p in &parts {
        t.merge(p);
    }
    t
}

/// `beta^geod_{k,l} = sum c^X c_X` over flats of rank `k` with `#A_X = l`.
pub fn geodesic_betti_formula(lattice: &IntersectionLattice, max_length: usize) -> BettiTable {
    let mut t = BettiTable::new(max_length);
    for x in lattice.flats() {
        if x.size() <= max_length {
            t.add(x.rank, x.size(), &HomologySummand::free(x.c_upper * x.c_lower));
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn boolean_intervals_are_spheres() {
        let a = catalog::boolean(3);
        let g = TopeGraph::enumerate(&a);
        let full = g.antipode(0);
        // open interval of the 3-cube: boundary of a triangle after barycentric subdivision
        let h = interval_reduced_homology(&g, 0, full, 2);
        assert_eq!(h.iter().map(|s| s.free_rank).collect::<Vec<_>>(), vec![0, 0, 1, 0]);
        let l = IntersectionLattice::build(&a);
        assert_eq!(geodesic_homology_direct(&g, 3), geodesic_betti_formula(&l, 3));
    }

    #[test]
    fn hexagon() {
        let a = catalog::braid(3);
        let g = TopeGraph::enumerate(&a);
        let l = IntersectionLattice::build(&a);
        let t = geodesic_homology_direct(&g, 4);
        assert_eq!(t, geodesic_betti_formula(&l, 4));
        assert_eq!(t.beta(2, 3), 6);
        assert_eq!(t.beta(1, 1), 12);
    }
}
