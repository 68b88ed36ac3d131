//! Exact solution of `V_q w = 1` for the weight vector of a tope graph.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{pade, IntPoly, PolyMatrix, RatFunc};
use crate::arrangement::TopeGraph;
use crate::error::AlgebraError;

/// How the weight vector is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStrategy {
    /// Bareiss below [`BAREISS_LIMIT`] chambers, series otherwise.
    Auto,
    /// Fraction-free elimination on the full Varchenko matrix.
    Bareiss,
    /// Power-series weights, rational reconstruction, exact certification.
    Series,
}

pub const BAREISS_LIMIT: usize = 32;

pub fn varchenko_matrix(g: &TopeGraph) -> PolyMatrix {
    PolyMatrix::from_fn(g.len(), |i, j| IntPoly::q_pow(g.distance(i, j)))
}

pub fn solve_weights(g: &TopeGraph, strategy: SolveStrategy) -> Result<Vec<RatFunc>, AlgebraError> {
    let bareiss = match strategy {
        SolveStrategy::Auto => g.len() <= BAREISS_LIMIT,
        SolveStrategy::Bareiss => true,
        SolveStrategy::Series => false,
    };
    if bareiss {
        let ones = vec![IntPoly::one(); g.len()];
        varchenko_matrix(g).solve(&ones)
    } else {
        series_weights(g)
    }
}

/// Chambers at each distance from each chamber.
fn spheres(g: &TopeGraph) -> Vec<Vec<Vec<usize>>> {
    let n = g.hyperplanes();
    (0..g.len())
        .map(|c| {
            let mut by = vec![Vec::new(); n + 1];
            for d in 0..g.len() {
                by[g.distance(c, d)].push(d);
            }
            by
        })
        .collect()
}

/// Coefficients `w^(0..=order)` of every weight, from
/// `w^(l)_C = -sum_{D != C} w^(l - d(C,D))_D` (the diagonal of `V_q` is 1).
pub fn weight_series(g: &TopeGraph, order: usize) -> Vec<Vec<BigInt>> {
    let sph = spheres(g);
    extend_weight_series(&sph, vec![vec![BigInt::one()]; g.len()], order)
}

fn extend_weight_series(sph: &[Vec<Vec<usize>>], mut w: Vec<Vec<BigInt>>, order: usize) -> Vec<Vec<BigInt>> {
    let start = w[0].len();
    for l in start..=order {
        let next: Vec<BigInt> = sph
            .iter()
            .map(|by| {
                let mut s = BigInt::zero();
                for (d, ds) in by.iter().enumerate().skip(1).take(l) {
                    for &x in ds {
                        s += &w[x][l - d];
                    }
                }
                -s
            })
            .collect();
        for (wc, v) in w.iter_mut().zip(next) {
            wc.push(v);
        }
    }
    w
}

/// Reconstructs each weight from its series by Padé approximation and
/// accepts the result only once `V_q w = 1` holds as an identity of
/// polynomials; otherwise the series is lengthened.
fn series_weights(g: &TopeGraph) -> Result<Vec<RatFunc>, AlgebraError> {
    let sph = spheres(g);
    let n = g.hyperplanes();
    let mut order = 16usize;
    let cap = 2 * g.len() * n.max(1) + 2;
    let mut w = vec![vec![BigInt::one()]; g.len()];
    loop {
        w = extend_weight_series(&sph, w, order);
        if let Some(sol) = reconstruct_and_certify(&sph, &w, order + 1) {
            return Ok(sol);
        }
        if order >= cap {
            // degree bound of Cramer's rule exceeded: fall back to elimination
            let ones = vec![IntPoly::one(); g.len()];
            return varchenko_matrix(g).solve(&ones);
        }
        order = (order * 2).min(cap);
    }
}

fn reconstruct_and_certify(sph: &[Vec<Vec<usize>>], w: &[Vec<BigInt>], len: usize) -> Option<Vec<RatFunc>> {
    let mut memo: HashMap<&[BigInt], RatFunc> = HashMap::new();
    let mut sol = Vec::with_capacity(w.len());
    for s in w {
        let f = match memo.get(s.as_slice()) {
            Some(f) => f.clone(),
            None => {
                let f = pade(&s[..len], len / 2)?;
                memo.insert(s.as_slice(), f.clone());
                f
            }
        };
        sol.push(f);
    }
    let mut l = IntPoly::one();
    for f in &sol {
        let g = l.gcd(f.den());
        l = &l * &f.den().div_exact(&g)?;
    }
    let scaled: Vec<IntPoly> = sol.iter().map(|f| f.num() * &l.div_exact(f.den()).unwrap()).collect();
    for by in sph {
        let mut acc = IntPoly::zero();
        for (d, ds) in by.iter().enumerate() {
            for &x in ds {
                acc = &acc + &scaled[x].shift(d);
            }
        }
        if acc != l {
            return None;
        }
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn strategies_agree() {
        for a in [catalog::boolean(2), catalog::braid(3), catalog::u34(), catalog::k4me()] {
            let g = TopeGraph::enumerate(&a);
            let b = solve_weights(&g, SolveStrategy::Bareiss).unwrap();
            let s = solve_weights(&g, SolveStrategy::Series).unwrap();
            assert_eq!(b, s);
        }
    }

    #[test]
    fn hexagon_weight_series() {
        let g = TopeGraph::enumerate(&catalog::braid(3));
        let w = weight_series(&g, 3);
        // every weight is 1/(1 + 2q + 2q^2 + q^3)
        assert_eq!(w[0], vec![1.into(), BigInt::from(-2), BigInt::from(2), BigInt::from(-1)]);
    }
}
