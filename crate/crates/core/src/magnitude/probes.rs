//! Sign-pattern and tope-poset probes on magnitude data.

use serde::Serialize;

use crate::algebra::{IntPoly, PowerSeriesPrefix, RatFunc};
use crate::arrangement::TopeGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternationReport {
    /// First `l` with `(-1)^l c_l < 0`.
    pub first_violation: Option<usize>,
    /// `(-1)^l c_l > 0` throughout the second half of the window.
    pub eventually_alternating: bool,
}

pub fn alternating_probe(series: &PowerSeriesPrefix) -> AlternationReport {
    let signed: Vec<num_rational::BigRational> = series
        .rationals()
        .iter()
        .enumerate()
        .map(|(l, c)| if l % 2 == 0 { c.clone() } else { -c.clone() })
        .collect();
    let zero = num_rational::BigRational::from_integer(0.into());
    let first_violation = signed.iter().position(|c| *c < zero);
    let half = signed.len().div_ceil(2);
    let eventually_alternating = signed[half..].iter().all(|c| *c > zero);
    AlternationReport {
        first_violation,
        eventually_alternating,
    }
}

/// `D_{A,B}(q) = sum_C q^{d(B,C)}`, the row sum of `V_q` at `B`.
pub fn tope_generating(g: &TopeGraph, b: usize) -> IntPoly {
    let mut counts = vec![0i64; g.hyperplanes() + 1];
    for c in 0..g.len() {
        counts[g.distance(b, c)] += 1;
    }
    IntPoly::from_i64(&counts)
}

/// The common `D_{A,B}` if it does not depend on `B`.
pub fn uniform_check(g: &TopeGraph) -> Option<IntPoly> {
    let d0 = tope_generating(g, 0);
    (1..g.len()).all(|b| tope_generating(g, b) == d0).then_some(d0)
}

/// For uniform `D`, the magnitude must be `#Ch / D`.
pub fn uniform_magnitude(g: &TopeGraph) -> Option<RatFunc> {
    let d = uniform_check(g)?;
    Some(RatFunc::reduce(IntPoly::from_i64(&[g.len() as i64]), d).expect("D(0) = 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::catalog;

    #[test]
    fn constant_and_violations() {
        let one = PowerSeriesPrefix::from_integers(vec![1.into()]);
        assert_eq!(alternating_probe(&one).first_violation, None);
        let s = PowerSeriesPrefix::from_integers([216, -672, 792, -360, -72, -48, 720, -1392, 1512].map(Into::into).to_vec());
        let r = alternating_probe(&s);
        assert_eq!(r.first_violation, Some(4));
        assert!(r.eventually_alternating);
    }

    #[test]
    fn generating_polynomials() {
        let g = TopeGraph::enumerate(&catalog::boolean(3));
        assert_eq!(uniform_check(&g), Some(IntPoly::from_i64(&[1, 3, 3, 1])));
        let g = TopeGraph::enumerate(&catalog::u34());
        assert_eq!(uniform_check(&g), None);
    }
}
