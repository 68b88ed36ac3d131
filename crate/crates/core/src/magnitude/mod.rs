//! Magnitude of a tope graph, by direct solution and by lattice recursion.

pub mod face_decomposition;
pub mod probes;
pub mod rank3;
pub mod solve;
pub mod varchenko;

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::algebra::{cyclotomic_factor, CyclotomicFactorization, PowerSeriesPrefix, RatFunc};
use crate::arrangement::{Arrangement, TopeGraph};
use crate::error::Result;

pub use face_decomposition::{interior, localized_magnitudes, magnitude_by_face_decomposition};
pub use probes::{alternating_probe, tope_generating, uniform_check, uniform_magnitude, AlternationReport};
pub use rank3::{rank3_magnitude, Rank3Stats};
pub use solve::{solve_weights, varchenko_matrix, weight_series, SolveStrategy};
pub use varchenko::{check_varchenko_det, det_product_formula, varchenko_det};

#[derive(Clone, Debug)]
pub struct MagnitudeResult {
    pub mag: RatFunc,
    pub interior: RatFunc,
    pub series: PowerSeriesPrefix,
    pub interior_series: PowerSeriesPrefix,
    pub cyclotomic: CyclotomicFactorization,
    pub checks: BTreeMap<String, bool>,
}

impl MagnitudeResult {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }
}

/// Sum of the weights `V_q^{-1} 1`, reduced, plus the structural report.
pub fn magnitude_direct(a: &Arrangement, g: &TopeGraph, order: usize, strategy: SolveStrategy) -> Result<MagnitudeResult> {
    let weights = solve_weights(g, strategy)?;
    let mag = weights.iter().fold(RatFunc::zero(), |acc, w| &acc + w);
    Ok(magnitude_report(mag, a.rank(), a.len(), g, order)?)
}

pub fn magnitude_report(mag: RatFunc, rank: usize, n: usize, g: &TopeGraph, order: usize) -> Result<MagnitudeResult> {
    let interior = interior(&mag, rank, n);
    let series = mag.series(order)?;
    let interior_series = interior.series(order)?;
    let cyclotomic = cyclotomic_factor(mag.den());
    let q1 = |f: &RatFunc| f.eval_i64(1);
    let one = BigRational::from_integer(1.into());
    let sign = BigRational::from_integer(if rank % 2 == 0 { 1 } else { -1 }.into());
    let deg = |p: &crate::algebra::IntPoly| p.degree().unwrap_or(0);

    let mut checks = BTreeMap::new();
    let mut put = |k: &str, v: bool| {
        checks.insert(k.to_string(), v);
    };
    put("one_point", q1(&mag) == Some(one));
    put("degree_gap", deg(mag.den()) == deg(mag.num()) + n);
    put("palindromic", mag.num().is_palindromic() && mag.den().is_palindromic());
    put(
        "cyclotomic_denominator",
        cyclotomic.is_fully_cyclotomic() && cyclotomic.multiplicity(1) == 0,
    );
    put("reciprocity", mag.reverse_substitute(0) == mag.scale_q_pow(n));
    put("series_integral", series.is_integral());
    let c = |l: usize| series.coeff(l).cloned();
    put("c0_chambers", c(0) == Some(BigRational::from_integer(g.len().into())));
    if order >= 1 {
        let e = -2 * g.edges().len() as i64;
        put("c1_edges", c(1) == Some(BigRational::from_integer(e.into())));
    }
    put("interior_at_one", q1(&interior) == Some(sign));
    Ok(MagnitudeResult {
        mag,
        interior,
        series,
        interior_series,
        cyclotomic,
        checks,
    })
}

/// `Mag(A1 + A2) = Mag(A1) Mag(A2)` on the block-diagonal direct sum.
pub fn magnitude_product_check(a1: &Arrangement, a2: &Arrangement) -> Result<bool> {
    let m = |a: &Arrangement| -> Result<RatFunc> {
        let g = TopeGraph::enumerate(a);
        let w = solve_weights(&g, SolveStrategy::Auto)?;
        Ok(w.iter().fold(RatFunc::zero(), |acc, x| &acc + x))
    };
    Ok(m(&a1.direct_sum(a2))? == &m(a1)? * &m(a2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;
    use crate::arrangement::catalog;

    #[test]
    fn boolean_closed_form() {
        for d in 0..=3 {
            let a = catalog::boolean(d);
            let g = TopeGraph::enumerate(&a);
            let r = magnitude_direct(&a, &g, 6, SolveStrategy::Auto).unwrap();
            let expect = RatFunc::reduce(
                IntPoly::from_i64(&[1 << d]),
                IntPoly::from_i64(&[1, 1]).pow(d as u32),
            )
            .unwrap();
            assert_eq!(r.mag, expect);
            assert!(r.all_checks_pass(), "{:?}", r.failed_checks());
        }
    }

    #[test]
    fn products() {
        assert!(magnitude_product_check(&catalog::boolean(1), &catalog::boolean(1)).unwrap());
        assert!(magnitude_product_check(&catalog::boolean(1), &catalog::braid(3)).unwrap());
    }
}
