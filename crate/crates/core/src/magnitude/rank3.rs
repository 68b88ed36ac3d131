//! Closed form for rank-3 arrangements in terms of `(n, #Ch, n_k)`.

use std::collections::BTreeMap;

use crate::algebra::{IntPoly, RatFunc};
use crate::arrangement::IntersectionLattice;

/// `n_k` counts faces of rank 2 whose localization has `k` hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank3Stats {
    pub n: usize,
    pub chambers: u64,
    pub nk: BTreeMap<usize, u64>,
}

impl Rank3Stats {
    /// `None` unless the arrangement has rank 3.
    pub fn from_lattice(lattice: &IntersectionLattice) -> Option<Rank3Stats> {
        if lattice.rank() != 3 {
            return None;
        }
        Some(Rank3Stats {
            n: lattice.hyperplanes(),
            chambers: lattice.bottom().c_upper,
            nk: lattice.rank2_counts(),
        })
    }

    /// `#F_1 = sum_k k n_k`: each edge face lies on exactly two rank-2 faces
    /// and each rank-2 face with `k` walls has `2k` edge faces.
    pub fn edge_faces(&self) -> u64 {
        self.nk.iter().map(|(&k, &c)| k as u64 * c).sum()
    }
}

/// `Mag = (#Ch - sum_k 2k n_k q (1 - q^{k-1}) / ((1 + q)(1 - q^k))) / (1 + q^n)`.
pub fn rank3_magnitude(stats: &Rank3Stats) -> RatFunc {
    let one = IntPoly::one();
    let mut acc = RatFunc::from_int(stats.chambers as i64);
    for (&k, &nk) in &stats.nk {
        let num = (&one - &IntPoly::q_pow(k - 1)).shift(1).scale(&(2 * k as u64 * nk).into());
        let den = &IntPoly::from_i64(&[1, 1]) * &(&one - &IntPoly::q_pow(k));
        acc = &acc - &RatFunc::reduce(num, den).expect("nonzero denominator");
    }
    &acc / &RatFunc::from_poly(&one + &IntPoly::q_pow(stats.n))
}
