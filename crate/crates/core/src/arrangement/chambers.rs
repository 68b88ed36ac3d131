//! Chamber enumeration by incremental insertion, and the tope graph.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::dot;
use super::{full_mask, lp, Arrangement, HyperplaneSet, Sign, SignVector};

/// Chambers as bitmasks (bit `i` set iff the chamber lies on the negative
/// side of hyperplane `i`), sorted ascending, with one interior point each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopeGraph {
    n: usize,
    chambers: Vec<u64>,
    witnesses: Vec<Vec<BigInt>>,
    index: HashMap<u64, usize>,
    edges: Vec<(usize, usize)>,
}

impl TopeGraph {
    /// Inserts the hyperplanes one at a time; a chamber splits when the
    /// opposite side of the new hyperplane is also feasible.
    pub fn enumerate(a: &Arrangement) -> TopeGraph {
        let normals = a.normals();
        let dim = a.dim();
        let mut cells: Vec<(Vec<Sign>, Vec<BigInt>)> = vec![(Vec::new(), vec![BigInt::zero(); dim])];
        for h in 0..normals.len() {
            let prefix = &normals[..=h];
            let mut next = Vec::with_capacity(cells.len() * 2);
            for (sigma, w) in cells {
                let side = Sign::of(&dot(&normals[h], &w));
                let try_side = |s: Sign| {
                    let mut t = sigma.clone();
                    t.push(s);
                    lp::sign_feasible(prefix, dim, &t).map(|x| (t, x))
                };
                match side {
                    Sign::Zero => {
                        next.extend(try_side(Sign::Plus));
                        next.extend(try_side(Sign::Minus));
                    }
                    s => {
                        let mut kept = sigma.clone();
                        kept.push(s);
                        next.extend(try_side(s.neg()));
                        next.push((kept, w));
                    }
                }
            }
            cells = next;
        }
        let mut pairs: Vec<(u64, Vec<BigInt>)> = cells
            .into_iter()
            .map(|(s, w)| (SignVector(s).chamber_mask().expect("full support"), w))
            .collect();
        pairs.sort_by_key(|(m, _)| *m);
        TopeGraph::from_chambers(normals.len(), pairs)
    }

    pub fn from_chambers(n: usize, pairs: Vec<(u64, Vec<BigInt>)>) -> TopeGraph {
        let chambers: Vec<u64> = pairs.iter().map(|(m, _)| *m).collect();
        let witnesses = pairs.into_iter().map(|(_, w)| w).collect();
        let index = chambers.iter().enumerate().map(|(i, &m)| (m, i)).collect::<HashMap<_, _>>();
        let mut edges = Vec::new();
        for (i, &c) in chambers.iter().enumerate() {
            for h in 0..n {
                if let Some(&j) = index.get(&(c ^ 1 << h)) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort();
        TopeGraph {
            n,
            chambers,
            witnesses,
            index,
            edges,
        }
    }

    pub fn hyperplanes(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn chambers(&self) -> &[u64] {
        &self.chambers
    }

    pub fn chamber(&self, i: usize) -> u64 {
        self.chambers[i]
    }

    pub fn witness(&self, i: usize) -> &[BigInt] {
        &self.witnesses[i]
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn sign_vector(&self, i: usize) -> SignVector {
        SignVector::from_chamber(self.chambers[i], self.n)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Hyperplanes separating chambers `i` and `j`.
    pub fn separation(&self, i: usize, j: usize) -> HyperplaneSet {
        self.chambers[i] ^ self.chambers[j]
    }

    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.separation(i, j).count_ones() as usize
    }

    pub fn antipode(&self, i: usize) -> usize {
        self.index[&(self.chambers[i] ^ full_mask(self.n))]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let c = self.chambers[i];
        (0..self.n).filter_map(|h| self.index_of(c ^ 1 << h)).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    /// Graph distances from `i` by breadth-first search.
    pub fn bfs(&self, i: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Rows of the distance matrix.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.distance(i, j)).collect()).collect()
    }

    /// Every pair at BFS distance equal to Hamming distance.
    pub fn is_isometric(&self) -> bool {
        (0..self.len()).all(|i| {
            let d = self.bfs(i);
            (0..self.len()).all(|j| d[j] == self.distance(i, j))
        })
    }

    /// `C -> -C` is a fixed-point-free involution and the unique chamber at
    /// distance `n` from each `C`.
    pub fn antipodal_ok(&self) -> bool {
        (0..self.len()).all(|i| {
            let far: Vec<usize> = (0..self.len()).filter(|&j| self.distance(i, j) == self.n).collect();
            let a = self.antipode(i);
            (self.n == 0 || a != i) && self.antipode(a) == i && (self.n == 0 || far == vec![a])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_square() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let g = TopeGraph::enumerate(&a);
        assert_eq!(g.chambers(), &[0, 1, 2, 3]);
        assert_eq!(g.edges().len(), 4);
        assert!(g.is_isometric());
        assert!(g.antipodal_ok());
        for i in 0..4 {
            assert_eq!(a.sign_vector(g.witness(i)), g.sign_vector(i));
        }
    }

    #[test]
    fn three_lines_hexagon() {
        let a = Arrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let g = TopeGraph::enumerate(&a);
        assert_eq!(g.len(), 6);
        assert!(!g.chambers().contains(&0b100));
        assert!((0..6).all(|i| g.degree(i) == 2));
        assert!(g.is_isometric());
    }

    #[test]
    fn empty_arrangement() {
        let a = Arrangement::from_integers(2, &[]).unwrap();
        let g = TopeGraph::enumerate(&a);
        assert_eq!(g.len(), 1);
        assert!(g.antipodal_ok());
    }
}
