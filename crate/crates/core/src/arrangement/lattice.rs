//! Intersection lattice: flats, Möbius function, chamber counts.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::chambers::TopeGraph;
use super::linalg::{self, nullspace, orient, primitive_int, pullback};
use super::{Arrangement, HyperplaneSet};
use crate::algebra::IntPoly;
use crate::error::ArrangementError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub id: usize,
    /// Codimension of the subspace.
    pub rank: usize,
    /// `A_X`: the hyperplanes containing the subspace.
    pub hyperplanes: HyperplaneSet,
    /// Primitive integer vectors spanning the subspace.
    pub basis: Vec<Vec<BigInt>>,
    /// `mu(0, X)`.
    pub mobius: i64,
    /// `c^X`, chambers of the restriction to `X`.
    pub c_upper: u64,
    /// `c_X`, chambers of the localization at `X`.
    pub c_lower: u64,
    /// Beta invariant of `A_X`; `None` for the bottom flat.
    pub beta: Option<u64>,
}

impl Flat {
    pub fn size(&self) -> usize {
        self.hyperplanes.count_ones() as usize
    }

    /// Boolean flats are those with `rank X = #A_X`.
    pub fn is_boolean(&self) -> bool {
        self.rank == self.size()
    }
}

/// The restriction `A^X` in the coordinates of a basis of `X`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub arrangement: Arrangement,
    pub basis: Vec<Vec<BigInt>>,
    /// For each restricted hyperplane, the original hyperplanes with that trace.
    pub traces: Vec<HyperplaneSet>,
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    dim: usize,
    n: usize,
    flats: Vec<Flat>,
    index: HashMap<HyperplaneSet, usize>,
    /// `mu[y][x] = mu(Y, X)`, zero unless `Y <= X`.
    mu: Vec<Vec<i64>>,
}

pub fn restrict_basis(a: &Arrangement, hyperplanes: HyperplaneSet, basis: &[Vec<BigInt>]) -> Restriction {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut traces: Vec<HyperplaneSet> = Vec::new();
    for (i, n) in a.normals().iter().enumerate() {
        if hyperplanes >> i & 1 == 1 {
            continue;
        }
        let g = orient(primitive_int(pullback(n, basis)));
        match rows.iter().position(|r| *r == g) {
            Some(k) => traces[k] |= 1 << i,
            None => {
                rows.push(g);
                traces.push(1 << i);
            }
        }
    }
    let labels = traces
        .iter()
        .map(|t| {
            let names: Vec<&str> = (0..a.len()).filter(|i| t >> i & 1 == 1).map(|i| a.labels()[i].as_str()).collect();
            names.join("=")
        })
        .collect();
    Restriction {
        arrangement: Arrangement::from_primitive(basis.len(), rows, labels),
        basis: basis.to_vec(),
        traces,
    }
}

/// `mu[y][x] = mu(Y, X)` for flats sorted by rank.
fn mobius_matrix(flats: &[Flat]) -> Vec<Vec<i64>> {
    let nf = flats.len();
    let leq = |y: &Flat, x: &Flat| y.hyperplanes & !x.hyperplanes == 0;
    let mut mu = vec![vec![0i64; nf]; nf];
    for y in 0..nf {
        mu[y][y] = 1;
        for x in y + 1..nf {
            if flats[x].rank <= flats[y].rank || !leq(&flats[y], &flats[x]) {
                continue;
            }
            let s: i64 = (y..x)
                .filter(|&z| leq(&flats[y], &flats[z]) && leq(&flats[z], &flats[x]) && flats[z].rank < flats[x].rank)
                .map(|z| mu[y][z])
                .sum();
            mu[y][x] = -s;
        }
    }
    mu
}

impl IntersectionLattice {
    pub fn build(a: &Arrangement) -> IntersectionLattice {
        let n = a.len();
        let dim = a.dim();
        let normals = a.normals();

        let closure_of_basis = |basis: &[Vec<BigInt>]| -> HyperplaneSet {
            (0..n)
                .filter(|&i| basis.iter().all(|b| linalg::dot(&normals[i], b).is_zero()))
                .fold(0, |m, i| m | 1 << i)
        };

        let mut levels: Vec<Vec<(HyperplaneSet, Vec<Vec<BigInt>>)>> = vec![vec![(0, nullspace(&[], dim))]];
        loop {
            let mut seen = BTreeSet::new();
            let mut next = Vec::new();
            for (mask, _) in levels.last().unwrap() {
                for h in 0..n {
                    if mask >> h & 1 == 1 {
                        continue;
                    }
                    let rows: Vec<Vec<BigInt>> =
                        (0..n).filter(|&i| (mask | 1 << h) >> i & 1 == 1).map(|i| normals[i].clone()).collect();
                    let basis = nullspace(&rows, dim);
                    let closed = closure_of_basis(&basis);
                    if seen.insert(closed) {
                        next.push((closed, basis));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by_key(|(m, _)| *m);
            levels.push(next);
        }

        let mut flats = Vec::new();
        for (rank, level) in levels.into_iter().enumerate() {
            for (mask, basis) in level {
                flats.push(Flat {
                    id: flats.len(),
                    rank,
                    hyperplanes: mask,
                    basis,
                    mobius: 0,
                    c_upper: 0,
                    c_lower: 0,
                    beta: None,
                });
            }
        }
        let mu = mobius_matrix(&flats);
        let nf = flats.len();
        let leq = |y: &Flat, x: &Flat| y.hyperplanes & !x.hyperplanes == 0;
        for x in 0..nf {
            flats[x].mobius = mu[0][x];
            let below: Vec<usize> = (0..nf).filter(|&y| leq(&flats[y], &flats[x])).collect();
            flats[x].c_lower = below.iter().map(|&y| mu[0][y].unsigned_abs()).sum();
            if x > 0 {
                let deriv: i64 = below.iter().map(|&y| mu[0][y] * (dim - flats[y].rank) as i64).sum();
                flats[x].beta = Some(deriv.unsigned_abs());
            }
            let r = restrict_basis(a, flats[x].hyperplanes, &flats[x].basis);
            flats[x].c_upper = TopeGraph::enumerate(&r.arrangement).len() as u64;
        }
        IntersectionLattice::from_flats(dim, n, flats, mu)
    }

    fn from_flats(dim: usize, n: usize, flats: Vec<Flat>, mu: Vec<Vec<i64>>) -> IntersectionLattice {
        let index = flats.iter().map(|f| (f.hyperplanes, f.id)).collect();
        IntersectionLattice { dim, n, flats, index, mu }
    }

    /// Reassembles a lattice from stored flats; the Möbius function is
    /// recomputed and must agree with the stored values.
    pub fn from_parts(dim: usize, n: usize, flats: Vec<Flat>) -> Option<IntersectionLattice> {
        let ordered = flats.iter().enumerate().all(|(i, f)| f.id == i)
            && flats.windows(2).all(|w| w[0].rank <= w[1].rank)
            && flats.first().is_some_and(|f| f.hyperplanes == 0);
        if !ordered {
            return None;
        }
        let mu = mobius_matrix(&flats);
        if flats.iter().any(|f| f.mobius != mu[0][f.id]) {
            return None;
        }
        Some(IntersectionLattice::from_flats(dim, n, flats, mu))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: usize) -> &Flat {
        &self.flats[id]
    }

    pub fn bottom(&self) -> &Flat {
        &self.flats[0]
    }

    /// The center `∩A`.
    pub fn top(&self) -> &Flat {
        self.flats.last().unwrap()
    }

    pub fn rank(&self) -> usize {
        self.top().rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn hyperplanes(&self) -> usize {
        self.n
    }

    pub fn by_hyperplanes(&self, set: HyperplaneSet) -> Option<&Flat> {
        self.index.get(&set).map(|&i| &self.flats[i])
    }

    /// Smallest flat whose hyperplane set contains `set`.
    pub fn closure(&self, set: HyperplaneSet) -> &Flat {
        self.flats.iter().find(|f| set & !f.hyperplanes == 0).expect("top flat contains everything")
    }

    pub fn of_rank(&self, k: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.rank == k)
    }

    pub fn leq(&self, y: usize, x: usize) -> bool {
        self.flats[y].hyperplanes & !self.flats[x].hyperplanes == 0
    }

    pub fn mobius(&self, y: usize, x: usize) -> i64 {
        self.mu[y][x]
    }

    /// `chi(A, t) = sum_X mu(0, X) t^{dim X}`.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![0i64; self.dim + 1];
        for f in &self.flats {
            coeffs[self.dim - f.rank] += f.mobius;
        }
        IntPoly::from_i64(&coeffs)
    }

    /// `c^X` again, from Zaslavsky's count on the upper interval.
    pub fn c_upper_mobius(&self, x: usize) -> u64 {
        (0..self.len()).filter(|&z| self.leq(x, z)).map(|z| self.mu[x][z].unsigned_abs()).sum()
    }

    /// Number of faces, `sum_X c^X`.
    pub fn face_count(&self) -> u64 {
        self.flats.iter().map(|f| f.c_upper).sum()
    }

    /// `n_k = sum of c^X over rank-2 flats with #A_X = k`.
    pub fn rank2_counts(&self) -> std::collections::BTreeMap<usize, u64> {
        let mut nk = std::collections::BTreeMap::new();
        for f in self.of_rank(2) {
            *nk.entry(f.size()).or_insert(0) += f.c_upper;
        }
        nk
    }

    fn check_flat(&self, set: HyperplaneSet) -> Result<&Flat, ArrangementError> {
        self.by_hyperplanes(set).ok_or(ArrangementError::NotAFlat)
    }

    /// `A_X`, in the ambient space.
    pub fn localize(&self, a: &Arrangement, set: HyperplaneSet) -> Result<Arrangement, ArrangementError> {
        self.check_flat(set)?;
        Ok(a.subarrangement(set))
    }

    /// `A^X`, coordinates taken from the stored basis of `X`.
    pub fn restrict(&self, a: &Arrangement, set: HyperplaneSet) -> Result<Restriction, ArrangementError> {
        let f = self.check_flat(set)?;
        Ok(restrict_basis(a, f.hyperplanes, &f.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_plane() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let l = IntersectionLattice::build(&a);
        assert_eq!(l.len(), 4);
        assert_eq!(l.characteristic_polynomial(), IntPoly::from_i64(&[1, -2, 1]));
        let x_axis = l.by_hyperplanes(0b10).unwrap();
        assert_eq!(x_axis.c_upper, 2);
        let r = l.restrict(&a, 0b10).unwrap();
        assert_eq!((r.arrangement.dim(), r.arrangement.len()), (1, 1));
        assert!(l.restrict(&a, 0b11).is_ok());
        assert!(matches!(l.localize(&a, 0b101), Err(ArrangementError::NotAFlat)));
    }

    #[test]
    fn three_lines() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let l = IntersectionLattice::build(&a);
        assert_eq!(l.len(), 5);
        let top = l.top();
        assert_eq!((top.rank, top.mobius, top.c_upper, top.c_lower, top.beta), (2, 2, 1, 6, Some(1)));
        for f in l.of_rank(1) {
            assert_eq!((f.c_upper, f.c_lower, f.beta), (2, 2, Some(1)));
        }
        for x in 0..l.len() {
            assert_eq!(l.c_upper_mobius(x), l.flat(x).c_upper);
        }
        assert_eq!(l.face_count(), 6 + 6 + 1);
    }
}
